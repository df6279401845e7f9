"""Command-line front end.

Report mode reads a (Multi)FASTA file and writes, per record, every word
whose deviation reaches ``--rho``. ``--bench`` and ``--search`` switch
to the scaling benchmark and the exhaustive small-n search.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import NamedTuple

from .enumerate import overabundant_words
from .errors import InvalidInput, ParseError, TooLarge
from .oracle import naive_overabundant
from .seqcore import SENTINEL, rank_encode
from .suffixtree import build
from .synth import random_sequence, scaling_benchmark, write_benchmark_tsv

COLUMNS = ("seq_id", "word", "length", "f", "E", "dev")
# naive enumeration holds every factor in memory
ORACLE_MAX_LENGTH = 3000
ORACLE_RANDOM_SEQUENCES = 50
DEV_TOLERANCE = 1e-9

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_MISMATCH = 3


class FastaRecord(NamedTuple):
    header: str
    sequence: str

    @property
    def seq_id(self) -> str:
        parts = self.header.split()
        return parts[0] if parts else ""


def parse_fasta(stream) -> list[FastaRecord]:
    """Records in file order; sequence lines are joined, stripped of whitespace and uppercased."""
    records = []
    header = None
    header_line = 0
    chunks: list[str] = []

    def close():
        if header is None:
            return
        if not chunks:
            raise ParseError(f"record {header!r} has an empty sequence", header_line)
        records.append(FastaRecord(header, "".join(chunks)))

    for lineno, line in enumerate(stream, start=1):
        line = line.rstrip("\r\n")
        if line.startswith(">"):
            close()
            header, header_line, chunks = line[1:].strip(), lineno, []
            continue
        body = "".join(line.split()).upper()
        if not body:
            continue
        if header is None:
            raise ParseError("sequence line before the first '>' header", lineno)
        if SENTINEL in body:
            raise ParseError(f"reserved symbol {SENTINEL!r} in sequence", lineno)
        chunks.append(body)
    close()
    return records


class Report(NamedTuple):
    record: FastaRecord
    rows: list  # (word, length, f, E, dev)


def _keep(length, args) -> bool:
    if args.length is not None and length != args.length:
        return False
    if args.min_length is not None and length < args.min_length:
        return False
    if args.max_length is not None and length > args.max_length:
        return False
    return True


def report(record: FastaRecord, args) -> Report:
    tree = build(rank_encode(record.sequence))
    rows = [(r.word, r.length, r.f_w, r.E, r.dev)
            for r in overabundant_words(tree, args.rho) if _keep(r.length, args)]
    return Report(record, rows)


def format_report(rep: Report) -> str:
    rec = rep.record
    lines = [f"# {rec.header} n={len(rec.sequence)} count={len(rep.rows)}"]
    for word, length, f, e, dev in rep.rows:
        lines.append(f"{rec.seq_id}\t{word}\t{length}\t{f}\t{e:.6f}\t{dev:.6f}")
    return "\n".join(lines) + "\n"


def worker_count() -> int:
    raw = os.environ.get("OW_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def oracle_mismatches(text: str, rho: float) -> list[str]:
    """Differences between the fast enumeration and the brute-force one."""
    expected = naive_overabundant(text, rho)
    got = {r.word: r.dev for r in overabundant_words(build(rank_encode(text)), rho)}
    problems = [f"missing {w}" for w in sorted(expected.keys() - got.keys())]
    problems += [f"spurious {w}" for w in sorted(got.keys() - expected.keys())]
    for w in sorted(expected.keys() & got.keys()):
        if abs(expected[w] - got[w]) > DEV_TOLERANCE:
            problems.append(f"dev of {w}: {got[w]!r} != {expected[w]!r}")
    return problems


def _random_texts(seed: int, count: int):
    for i in range(count):
        n = 1 + (seed + 7 * i) % 40
        sigma = 2 + i % 3
        yield random_sequence(n, sigma, seed * 1000 + i).text()


def run_oracle(records, args, err) -> int:
    failed = 0
    checked = [(rec.seq_id, rec.sequence) for rec in records]
    checked += [(f"random{i}", t)
                for i, t in enumerate(_random_texts(args.seed, ORACLE_RANDOM_SEQUENCES))]
    for name, text in checked:
        if len(text) > ORACLE_MAX_LENGTH:
            print(f"oracle: skipped {name} (n={len(text)} > {ORACLE_MAX_LENGTH})", file=err)
            continue
        problems = oracle_mismatches(text, args.rho)
        if problems:
            failed += 1
            print(f"oracle: {name}: " + "; ".join(problems[:5]), file=err)
    print(f"oracle: {len(checked)} sequences, {failed} mismatched", file=err)
    return EXIT_MISMATCH if failed else EXIT_OK


def _positive_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (value > 0 and math.isfinite(value)):
        raise argparse.ArgumentTypeError(f"must be a finite number > 0: {text!r}")
    return value


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text!r}")
    return value


def _int_list(text):
    try:
        values = [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}") from None
    if not values or min(values) < 1:
        raise argparse.ArgumentTypeError(f"expected positive integers: {text!r}")
    return values


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="overabundant",
        description="List the words of each FASTA record whose deviation is at least RHO.",
    )
    p.add_argument("--input", metavar="PATH", help="(Multi)FASTA file; '-' reads stdin")
    p.add_argument("--rho", type=_positive_float, help="deviation threshold, > 0")
    p.add_argument("--output", metavar="PATH", help="output file (default: stdout)")
    p.add_argument("--length", type=_positive_int, metavar="K", help="keep only words of length K")
    p.add_argument("--min-length", type=_positive_int, metavar="K")
    p.add_argument("--max-length", type=_positive_int, metavar="K")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check against brute force; exit 3 on any mismatch")
    p.add_argument("--bench", type=_int_list, metavar="N1,N2,...",
                   help="time random sequences of these lengths instead of reading input")
    p.add_argument("--sigma", type=_positive_int, default=4, help="alphabet size for --bench")
    p.add_argument("--search", type=_int_list, metavar="N,SIGMA",
                   help="exhaustively find the sequences with the most reported words")
    p.add_argument("--seed", type=int, default=0)
    return p


def _validate(p, args):
    if args.seed < 0:
        p.error("--seed must be non-negative")
    if args.bench and args.search:
        p.error("--bench and --search are mutually exclusive")
    if args.search:
        if len(args.search) != 2:
            p.error("--search takes exactly two integers: N,SIGMA")
        return
    if args.rho is None:
        p.error("--rho is required")
    if args.bench:
        if args.bench != sorted(args.bench):
            p.error("--bench lengths must be ascending")
        if args.sigma < 2:
            p.error("--sigma must be at least 2")
        return
    if args.input is None:
        p.error("--input is required")
    if args.min_length and args.max_length and args.min_length > args.max_length:
        p.error("--min-length exceeds --max-length")


def _run_search(args, out) -> int:
    from .oracle import extremal_search

    n, sigma = args.search
    rep = extremal_search(n, sigma, args.rho)
    out.write(f"# n={rep.n} sigma={rep.sigma} rho={rep.rho!r} best_count={rep.best_count} "
              f"examined={rep.examined}\n")
    for w in rep.witnesses:
        out.write(w + "\n")
    return EXIT_OK


def _run_reports(args, out, err) -> int:
    if args.input == "-":
        records = parse_fasta(sys.stdin)
    else:
        with open(args.input, encoding="utf-8") as fh:
            records = parse_fasta(fh)
    if args.oracle:
        return run_oracle(records, args, err)
    out.write("\t".join(COLUMNS) + "\n")
    threads = worker_count()
    if threads > 1 and len(records) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            reports = pool.map(lambda rec: report(rec, args), records)
            for rep in reports:
                out.write(format_report(rep))
    else:
        for rec in records:
            out.write(format_report(report(rec, args)))
    return EXIT_OK


def run(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    err = sys.stderr
    out = None
    try:
        out = open(args.output, "w", encoding="utf-8", newline="\n") if args.output else sys.stdout
        if args.search:
            return _run_search(args, out)
        if args.bench:
            rows = scaling_benchmark(args.bench, args.sigma, args.rho, args.seed)
            write_benchmark_tsv(rows, out)
            return EXIT_OK
        return _run_reports(args, out, err)
    except (TooLarge, InvalidInput) as exc:
        print(f"overabundant: {exc}", file=err)
        return EXIT_USAGE
    except (OSError, ParseError, UnicodeDecodeError) as exc:
        print(f"overabundant: {exc}", file=err)
        return EXIT_IO
    finally:
        if out is not None and out is not sys.stdout:
            out.close()


def main(argv=None) -> int:
    try:
        return run(argv)
    except SystemExit as exc:
        # argparse reports usage errors this way
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

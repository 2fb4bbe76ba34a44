#!/usr/bin/env python3
"""Benchmark grid over variants x k on a corpus; writes a CSV table.

Example:

    python scripts/bench_compare.py \
        --input tests/fixtures/clustered_2000x5000.svml \
        --ks 2 10 20 --repeats 3 --out bench.csv
"""

import argparse

from spkmeans import cli, corpus_io, engine


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--input", required=True)
    p.add_argument("--variants", nargs="+", default=list(engine.VARIANTS),
                   choices=engine.VARIANTS)
    p.add_argument("--ks", nargs="+", type=int, required=True)
    p.add_argument("--init", default="uniform")
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--chain-length", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--max-iter", type=int, default=100)
    p.add_argument("--tfidf", action="store_true")
    p.add_argument("--out", default="bench.csv")
    args = p.parse_args()

    data = corpus_io.load_dataset(args.input, tfidf=args.tfidf)
    rows = cli.bench_compare(
        data, args.variants, args.ks,
        init=args.init, alpha=args.alpha, chain_length=args.chain_length,
        seed=args.seed, repeats=args.repeats, max_iter=args.max_iter,
    )
    cli.write_bench_csv(rows, args.out)
    print(",".join(cli.BENCH_HEADER))
    for row in rows:
        print(",".join(str(row[c]) for c in cli.BENCH_HEADER))
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()

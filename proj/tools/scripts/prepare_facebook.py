#!/usr/bin/env python3
"""Convert the SNAP Facebook ego-network release into tricomm input files.

Input is the extracted `facebook/` directory of facebook.tar.gz (per-ego
.edges/.feat/.egofeat/.featnames/.circles files), optionally alongside
facebook_combined.txt. Writes edges.txt, features.txt (sparse, binary) and
communities.txt (one circle per line) into the output directory.

Feature columns are matched across egos by their featnames text, so the same
anonymised feature gets the same global dimension everywhere; a node seen by
several egos gets the union of its bits.
"""
import argparse
import collections
import pathlib
import sys


def read_featnames(path):
    names = {}
    for line in path.read_text().splitlines():
        if not line.strip():
            continue
        idx, name = line.split(" ", 1)
        names[int(idx)] = name.strip()
    return names


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("source", type=pathlib.Path, help="extracted facebook/ directory")
    ap.add_argument("out", type=pathlib.Path, help="output directory, e.g. data/facebook")
    ap.add_argument("--combined", type=pathlib.Path, help="facebook_combined.txt (default: rebuilt from ego files)")
    ap.add_argument("--min-circle-size", type=int, default=1, help="drop circles smaller than this")
    args = ap.parse_args()

    egos = sorted(int(p.stem) for p in args.source.glob("*.featnames"))
    if not egos:
        sys.exit(f"no *.featnames files under {args.source}")

    vocabulary = {}
    bits = collections.defaultdict(set)
    edges = set()
    circles = []
    for ego in egos:
        local = read_featnames(args.source / f"{ego}.featnames")
        column = {i: vocabulary.setdefault(name, len(vocabulary)) for i, name in sorted(local.items())}

        def take(node, values):
            for i, v in enumerate(values):
                if v == "1":
                    bits[node].add(column[i])

        for line in (args.source / f"{ego}.feat").read_text().splitlines():
            fields = line.split()
            if fields:
                take(int(fields[0]), fields[1:])
        egofeat = (args.source / f"{ego}.egofeat").read_text().split()
        take(ego, egofeat)

        members = set()
        for line in (args.source / f"{ego}.edges").read_text().splitlines():
            if line.strip():
                a, b = map(int, line.split())
                members.update((a, b))
                if a != b:
                    edges.add((min(a, b), max(a, b)))
        # the ego is adjacent to every alter in its network
        for line in (args.source / f"{ego}.feat").read_text().splitlines():
            if line.strip():
                members.add(int(line.split()[0]))
        for v in members - {ego}:
            edges.add((min(ego, v), max(ego, v)))

        for line in (args.source / f"{ego}.circles").read_text().splitlines():
            fields = line.split()
            ids = sorted(set(int(x) for x in fields[1:]))
            if len(ids) >= args.min_circle_size and ids:
                circles.append(ids)

    if args.combined:
        edges = set()
        for line in args.combined.read_text().splitlines():
            if line.strip() and not line.startswith("#"):
                a, b = map(int, line.split())
                if a != b:
                    edges.add((min(a, b), max(a, b)))

    args.out.mkdir(parents=True, exist_ok=True)
    with open(args.out / "edges.txt", "w") as f:
        for a, b in sorted(edges):
            f.write(f"{a} {b}\n")
    with open(args.out / "features.txt", "w") as f:
        for node in sorted(bits):
            f.write(str(node) + "".join(f" {d}:1" for d in sorted(bits[node])) + "\n")
    with open(args.out / "communities.txt", "w") as f:
        for ids in circles:
            f.write(" ".join(map(str, ids)) + "\n")

    nodes = {v for e in edges for v in e}
    print(f"nodes {len(nodes)}, edges {len(edges)}, feature dims {len(vocabulary)}, circles {len(circles)}")


if __name__ == "__main__":
    main()

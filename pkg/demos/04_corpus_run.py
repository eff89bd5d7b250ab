#!/usr/bin/env python3
# A small random corpus through the same checks the command line runs.
import json
from collections import Counter

from lexcoh import MonomialIdeal
from lexcoh.corpus import CorpusSpec, generate_corpus
from lexcoh.harness import DEFAULT_CHECKS, run_corpus
from lexcoh.io import IdealFile

spec = CorpusSpec("monomial", n=4, max_degree=3, max_gens=6, count=300, seed=7)
files = generate_corpus(spec)
# random draws rarely land on two disjoint lines, so add one by hand
files.append(IdealFile.from_ideal(MonomialIdeal.parse("X1^2*X2, X2^2*X4, X1*X3, X3*X4", 4), "two-lines"))
print(f"{len(files)} ideals, e.g. {files[0].body()}")

failed = Counter()
examples = {}
for records in run_corpus(files, DEFAULT_CHECKS, seed=0):
    for r in records:
        if not r["ok"]:
            failed[r["check"]] += 1
            examples.setdefault(r["check"], r)

print("failed records per check:", dict(failed) or "none")
for name, r in examples.items():
    print(name, json.dumps({k: r[k] for k in ("instance", "ideal", "failures") if k in r}, default=str))

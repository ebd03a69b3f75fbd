"""Compare prefix forms with their inputs on every small interpretation.

    python3 scripts/prenex_oracle.py --count 500 --domain 3 --seed 1
"""
from __future__ import annotations

import argparse
import random
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from derivus.models import counterexample
from derivus.syntax import render_formula
from derivus.transformers import is_prenex, prenex

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))
from strategies import random_fo_formula  # noqa: E402


@dataclass
class OracleConfig:
    count: int = 200
    domain: int = 3
    seed: int = 2024
    quants: int = 3
    preds: int = 3


def run(cfg: OracleConfig) -> int:
    rng = random.Random(cfg.seed)
    t = time.perf_counter()
    bad = 0
    sizes = []
    for _ in range(cfg.count):
        F = random_fo_formula(rng, quants=cfg.quants, npreds=cfg.preds)
        G = prenex(F)
        sizes.append(len(render_formula(G).split()) / len(render_formula(F).split()))
        cex = counterexample(F, G, cfg.domain)
        if cex is not None or not is_prenex(G):
            bad += 1
            print("MISMATCH", render_formula(F), "=>", render_formula(G), cex)
    print(f"{cfg.count} formulas, {bad} mismatches, domains 1..{cfg.domain}, "
          f"mean size ratio {sum(sizes) / len(sizes):.2f}, {time.perf_counter() - t:.1f}s")
    return bad


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--domain", type=int, default=3)
    p.add_argument("--seed", type=int, default=2024)
    a = p.parse_args()
    sys.exit(1 if run(OracleConfig(a.count, a.domain, a.seed)) else 0)


if __name__ == "__main__":
    main()

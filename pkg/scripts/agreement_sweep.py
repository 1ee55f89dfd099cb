"""Three-way detector agreement on Ginibre states of every rank.

Reports, per rank, how many states each detector calls entangled, how many
fall in the boundary band and how many disagree outside it.
"""
import argparse
import json
import time
from dataclasses import dataclass

import numpy as np

from lubargmann.entanglement import BOUNDARY_BAND, bargmann_lhs, det_pt, makhlin_sides
from lubargmann.invariants import bargmann_direct
from lubargmann.states import params_from_state, random_density


@dataclass(frozen=True)
class AgreementConfig:
    states: int = 10_000
    seed: int = 0
    band: float = BOUNDARY_BAND


def run(cfg: AgreementConfig, rank: int) -> dict:
    rng = np.random.default_rng([cfg.seed, rank])
    counts = {"rank": rank, "entangled": 0, "in_band": 0, "disagree": 0}
    for _ in range(cfg.states):
        rho = random_density(rng, rank=rank)
        lhs, rhs = makhlin_sides(params_from_state(rho))
        m = (-det_pt(rho), rhs - lhs, 1.0 - bargmann_lhs(bargmann_direct(rho)))
        if min(map(abs, m)) <= cfg.band:
            counts["in_band"] += 1
            continue
        verdicts = {x > 0 for x in m}
        counts["disagree"] += len(verdicts) > 1
        counts["entangled"] += m[0] > 0
    return counts


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--states", type=int, default=AgreementConfig.states)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    cfg = AgreementConfig(args.states, args.seed)
    t0 = time.perf_counter()
    rows = [run(cfg, r) for r in (1, 2, 3, 4)]
    print(json.dumps({"states_per_rank": cfg.states, "rows": rows, "seconds": round(time.perf_counter() - t0, 2)}, indent=2))


if __name__ == "__main__":
    main()

"""Per-index error of the L <-> B polynomial maps against direct evaluation.

Shows both the as-transcribed maps (``verbatim=True``) and the certified
defaults, so any entry that fails is visible by index.
"""
import argparse
from dataclasses import dataclass

import numpy as np

from lubargmann.invariants import L_from_B, bargmann_direct, bargmann_from_L, makhlin_L
from lubargmann.states import params_from_state, random_density


@dataclass(frozen=True)
class AuditConfig:
    states: int = 1000
    seed: int = 0


def audit(cfg: AuditConfig):
    rng = np.random.default_rng(cfg.seed)
    err = {k: np.zeros(18) for k in ("B verbatim", "B certified", "L verbatim", "L certified")}
    for _ in range(cfg.states):
        rho = random_density(rng)
        L = makhlin_L(params_from_state(rho))
        B = bargmann_direct(rho)
        for verbatim, tag in ((True, "verbatim"), (False, "certified")):
            err[f"B {tag}"] = np.maximum(err[f"B {tag}"], np.abs(bargmann_from_L(L, verbatim).values - B.values))
            err[f"L {tag}"] = np.maximum(err[f"L {tag}"], np.abs(L_from_B(B, verbatim).values - L.values))
    return err


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--states", type=int, default=AuditConfig.states)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    err = audit(AuditConfig(args.states, args.seed))
    print("index " + " ".join(f"{k:>13}" for k in err))
    for i in range(18):
        print(f"{i + 1:>5} " + " ".join(f"{v[i]:13.2e}" for v in err.values()))


if __name__ == "__main__":
    main()

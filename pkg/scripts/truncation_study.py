"""How the cutoff affects naive versus safe-subspace commutators.

For each cutoff N, compares [K1, B1] = i H on the full truncated space
(where truncation corrupts the top states) and on the safe subspace.

    python scripts/truncation_study.py [--max-cutoff 10]
"""

import argparse

import numpy as np

from sp4osc import fock
from sp4osc.fock import FockSpace
from sp4osc.quantization import dirac_representation


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-cutoff", type=int, default=10)
    args = parser.parse_args()

    print("N,dim,safe_K,safe_dim,full_residual,safe_residual")
    for n in range(4, args.max_cutoff + 1):
        space = FockSpace(2, n)
        d = dirac_representation(space)
        sc = fock.safe_commutator(d["K1"], d["B1"])
        target = 1j * d["H"]
        full = np.abs((sc.result - target).toarray()).max()
        safe = fock.safe_distance(sc.result, target, sc.safe_cutoff)
        print(f"{n},{space.dim},{sc.safe_cutoff},{len(space.safe_indices(sc.safe_cutoff))},{full:.3e},{safe:.3e}")


if __name__ == "__main__":
    main()

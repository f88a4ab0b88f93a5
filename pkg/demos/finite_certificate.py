"""Solver against the brute-force oracle on a small finite space.

Three points on a chain, with the third far away.  The solver iterates
to an exact coincidence tuple; the oracle enumerates every tuple,
machine-verifies the hypotheses of each theorem and checks its
conclusion.  Dropping the order to an antichain makes directedness fail,
and the oracle refuses to certify uniqueness.
"""

from ntupled import certify_theorem, enumerate_star_coincidence, solve
from ntupled.errors import HypothesesNotMachineVerified
from ntupled.instance import load_instance
from ntupled.oracle import THEOREMS


def main():
    inst = load_instance("finite_chain_t1")
    res = solve(inst)
    print(f"solver: {res.trace.status} in {res.trace.steps} step(s), answer {res.answer}")
    sets = enumerate_star_coincidence(inst.space, inst.F, inst.g, inst.op)
    print("oracle coincidence tuples:", sorted(sets.coincidence))
    for theorem in THEOREMS:
        cert = certify_theorem(inst, theorem)
        print(f"  {theorem}: {cert.conclusion:<75} {'holds' if cert.verdict else 'FAILS'}")

    print()
    flat = load_instance("finite_antichain")
    try:
        certify_theorem(flat, "T2")
    except HypothesesNotMachineVerified as exc:
        print("antichain:", exc)


if __name__ == "__main__":
    main()

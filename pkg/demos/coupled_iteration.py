"""Coupled iteration for F(x, y) = (x - y)/4 on the real line.

Both gates are sampled, the start (-1, 1) is ordered against its image,
and every step halves the residual, so the iterate reaches (0, 0) to
1e-10 in a few dozen steps.
"""

from ntupled import ProblemInstance, RealSpace, linear, preset, solve


def main():
    op, part = preset("coupled")
    inst = ProblemInstance(
        space=RealSpace(),
        F=lambda U: (U[0] - U[1]) / 4,
        op=op,
        part=part,
        phi=linear("1/2"),
        contraction_form="pointwise-sum",
        initial=(-1.0, 1.0),
    )
    res = solve(inst, tol=1e-10)
    print("mixed monotone:", res.report["mixed_monotone"]["holds"],
          f"({res.report['mixed_monotone']['cases']} sampled cases)")
    print("contraction:   ", res.report["contraction"]["holds"],
          f"({res.report['contraction']['cases']} sampled pairs)")
    print(f"{'m':>3} {'x':>14} {'y':>14} {'residual':>10} {'ratio':>6}")
    prev = None
    for rec in res.trace.records():
        r = rec["nabla_residual"]
        ratio = f"{r / prev:.3f}" if r is not None and prev else ""
        rs = f"{r:.3e}" if r is not None else ""
        x, y = rec["tuple"]
        print(f"{rec['m']:>3} {x:>14.6e} {y:>14.6e} {rs:>10} {ratio:>6}")
        prev = r
    print("status:", res.trace.status, "answer:", res.answer)


if __name__ == "__main__":
    main()

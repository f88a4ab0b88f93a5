"""Which index operations are compatible with mixed monotonicity?

Walks the preset catalog for n = 2..7 with the odd/even split, prints
whether each operation lies in U and whether it is permuted, and shows
the offending products for forward cyclic on three indices.
"""

from ntupled import backward_cyclic, forward_cyclic, is_member_U, is_permuted, odd_even, skew_1, skew_n

BUILDERS = {
    "forward-cyclic": forward_cyclic,
    "backward-cyclic": backward_cyclic,
    "skew-1": skew_1,
    "skew-n": skew_n,
}


def main():
    print(f"{'operation':<16}" + "".join(f"  n={n:<9}" for n in range(2, 8)))
    for name, build in BUILDERS.items():
        cells = []
        for n in range(2, 8):
            op, part = build(n), odd_even(n)
            member = "U" if is_member_U(op, part) else "-"
            perm = "perm" if is_permuted(op)[0] else "    "
            cells.append(f"  {member} {perm:<8}")
        print(f"{name:<16}" + "".join(cells))

    print()
    print("forward cyclic, n = 3:")
    print(forward_cyclic(3))
    for w in is_member_U(forward_cyclic(3), odd_even(3)).witnesses:
        print(f"  {w.pair[0]} * {w.pair[1]} = {w.value} breaks closure rule ({w.condition})")


if __name__ == "__main__":
    main()

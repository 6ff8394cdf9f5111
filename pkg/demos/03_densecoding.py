"""Dense-coding capacities across sender distributions.

The sender applies one of {s0, s1, i s2, s3} to each held qubit; the
message count is the size of a maximum clique in the orthogonality graph
of the encoded states.  The interesting part is how the count depends on
WHICH qubits the sender holds, not just how many.
"""

import math

from quadproto import best_over_subsets, distinguishable_messages, make_state


def table_row(name: str, state, k: int) -> str:
    best, per = best_over_subsets(state, k)
    cells = " ".join("%s:%d" % ("".join(map(str, sub)), n)
                     for sub, n in sorted(per.items()))
    return "  DC%d  best N=%-3d (%g cbits)   per subset: %s" % (
        k, best.count, math.log2(best.count), cells)


def main() -> None:
    for name in ("GHZ4", "W4", "Omega", "Q4", "Q5"):
        state = make_state(name).state
        print(name)
        for k in (1, 2, 3):
            print(table_row(name, state, k))
        print()

    print("position dependence, spelled out for Q4:")
    q4 = make_state("Q4").state
    for qubit in range(4):
        res = distinguishable_messages(q4, (qubit,))
        print("  sender holds qubit %d: N=%d" % (qubit, res.count))
    print()

    res = distinguishable_messages(make_state("Omega").state, (0, 1))
    print("Omega two-qubit witness (all 16 messages):")
    for names in res.witness:
        print("   ", "*".join(names))


if __name__ == "__main__":
    main()

"""Tour of the state and basis catalog.

Prints the five principal four-qubit resources with their amplitudes and
SLOCC classification, then lists every named measurement basis together
with the corrections that were applied to keep them orthonormal.
"""

from quadproto import (
    basis_names,
    corrections_for,
    make_basis,
    make_state,
    state_names,
)


def show_state(name: str) -> None:
    named = make_state(name)
    print("%s  (%d qubits, SLOCC: %s)" % (named.name, named.num_qubits,
                                          named.slocc or "-"))
    for label, amp in named.state.ket_terms():
        print("   |%s>  %+.4f%+.4fi" % (label, amp.real, amp.imag))


def main() -> None:
    print("== principal resources ==")
    for name in ("GHZ4", "W4", "Omega", "Q4", "Q5"):
        show_state(name)
        print()

    print("== full catalog ==")
    print("states:", ", ".join(state_names()))
    print()

    print("== measurement bases ==")
    for bname in basis_names():
        basis = make_basis(bname)
        fixes = corrections_for(bname)
        tag = ""
        if fixes:
            tag = "  [%d corrected: %s]" % (
                len(fixes), ", ".join(c.label for c in fixes))
        print("  %-18s %2d vectors on %d qubits%s"
              % (bname, len(basis.labels), basis.num_qubits, tag))

    print()
    print("== correction detail ==")
    for bname in basis_names():
        for c in corrections_for(bname):
            print("%s / %s" % (c.basis, c.label))
            print("   method: %s" % c.method)
            if c.note:
                print("   note:   %s" % c.note)


if __name__ == "__main__":
    main()

"""Lift permutations into the Clifford model of the double cover and watch the signs."""

from unrx.permcover import CliffordElement, Permutation, clifford_commutator, clifford_order, lift, project

n = 8
one = CliffordElement.scalar(n)
for d in range(1, 5):
    s = Permutation.from_cycles(n, [(2 * k + 1, 2 * k + 2) for k in range(d)])
    print(f"{d} disjoint transpositions: lift has order {clifford_order(lift(s))}")

a = lift(Permutation.transposition(n, 1, 2))
b = lift(Permutation.transposition(n, 3, 4))
print("commutator of disjoint transposition lifts is -1:", clifford_commutator(a, b) == -one)

s = Permutation.from_cycles(n, [(1, 3, 5), (2, 8)])
t = Permutation.from_cycles(n, [(1, 2, 3, 4)])
z, w = lift(s) * lift(t), lift(s * t)
print("lift(s) lift(t) = lift(st)?", z == w, "  = -lift(st)?", z == -w)
print("projection recovers s:", project(lift(s)) == s)

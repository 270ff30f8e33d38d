"""Run both trinomial families over a few parameters and summarize each clause."""

from unrx import families as fam

for family, n, ts in (("tech1", 11, [1, 3, 7, 9, 13]), ("tech2", 10, [1, 7, 11, 1003])):
    print(f"{family}, n = {n}")
    for t in ts:
        rep = fam.verify(family, n, t)
        clauses = "  ".join(f"{c.clause}:{c.verdict}" for c in rep.clauses)
        print(f"  t = {t:<5} {clauses}  real roots {rep.real_roots}  S_n {rep.sn['verdict']}  -> {rep.verdict}")

# clause ii in detail for one parameter
rep = fam.verify("tech1", 11, 3)
print("\ntame primes for tech1, n = 11, t = 3")
for e in rep.clauses[1].primes:
    symbol = e.get("split_symbol")
    shown = f"{symbol:+d}" if symbol is not None else " ."
    print(f"  q = {e['prime']:>18}  multiplicity {e['disc_multiplicity']}  (5/q) = {shown}  {e['verdict']}")

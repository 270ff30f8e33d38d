"""Walk through the sextic rational function: critical data, fixed primes, the seed lattice and one seed."""

from unrx import exactnum as en
from unrx import ratcrit as rc
from unrx.cli import builtin_sextic

f, _ = builtin_sextic()
points = rc.critical_data(f)

print("critical values and their residue discriminant classes")
for p, group in zip(points, rc.residue_groups(points)):
    print(f"  gamma = {str(p.gamma):>10}   Delta = {' * '.join(map(str, en.factorize(p.delta).primes())):<56} {group}")

content, forms = rc.homogenized_discriminant(f, points)
fixed = rc.fixed_prime_divisors(content, forms)
print("\ndiscriminant content", content, "=", " * ".join(f"{q}^{e}" for q, e in en.factorize(content)))
print("fixed prime divisors", fixed)

# accept the class 385 mod 2^5 3^6 and show why 3 is harmless there
base, N, local = rc.unramified_seed_search(f, fixed, forms, base=(385, 1), modulus=23328)
print(f"\nseed class t = {base[0]} mod {N}")
for step in local[3]["certificate"]["transcript"]:
    if "reduction" in step:
        print(f"  mod 3 at level {step['level']:<12} {step['reduction']}")

rep = rc.verify_seed(f, 783, 17, base=base, modulus=N)
print("\nparity records at (t0, s0) = (783, 17)")
for rec in rep.records:
    print(f"  gamma = {rec['gamma']:>10}  D = {rec['D']:>14}  product = {rec['product']:+d}")
print("verdict:", rep.verdict)

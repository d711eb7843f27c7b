"""The truncated-second-moment (Lindeberg) functional of the divisibility
indicator sum, evaluated exactly from the two-branch distribution per prime.

For fixed epsilon the functional vanishes only when eps * sigma(N) clears the
largest summand branch (about 1), and sigma grows like sqrt(ln ln N), so the
fixed-eps decay is doubly-logarithmically slow. Letting epsilon shrink like a
power of 1/sigma shows the vanishing cleanly at desk scale.

Run:  python demos/05_lindeberg.py
"""

import math

from omegalab import lindeberg_lambda, primes_up_to

table = primes_up_to(10_000_000)
ns = (1_000, 10_000, 100_000, 1_000_000, 10_000_000)
eps_grid = (0.01, 0.1, 0.3, 0.5, 0.7, 1.0)

# ---------------------------------------------------------------------------
# centered variant: summands are the mean-centered indicators.
# ---------------------------------------------------------------------------
print("centered lambda(N, eps)")
print("        N   sigma  " + "".join(f"  eps={e:<5}" for e in eps_grid))
for n in ns:
    row = [lindeberg_lambda(n, e, table) for e in eps_grid]
    sigma = math.sqrt(row[0].sigma2)
    cells = "".join(f"  {r.lambda_value:<9.4f}" for r in row)
    print(f"{n:>9,}   {sigma:.3f}{cells}")
print("lambda is nonincreasing in eps and hits exactly 0 once eps*sigma > 1")

# ---------------------------------------------------------------------------
# raw-indicator variant: the unmodified 0/1 indicators. The nonzero plateau
# is sum(1/p)/sigma^2 > 1, a step function that drops to 0 at eps = 1/sigma.
# ---------------------------------------------------------------------------
print("\nraw-indicator lambda(N, eps)")
print("        N  " + "".join(f"  eps={e:<5}" for e in eps_grid))
for n in ns[:3]:
    row = [lindeberg_lambda(n, e, table, "literal") for e in eps_grid]
    print(f"{n:>9,}" + "".join(f"  {r.lambda_value:<9.4f}" for r in row))

# ---------------------------------------------------------------------------
# epsilon shrinking with N: eps = sigma^(-delta). Any fixed delta in (0, 1)
# keeps eps*sigma = sigma^(1-delta) growing, so the functional is 0 at every
# desk-scale N already.
# ---------------------------------------------------------------------------
print("\ncentered lambda at eps = sigma^(-delta)")
print("        N    delta=0.25  delta=0.5  delta=0.75")
for n in ns:
    cells = []
    for delta in (0.25, 0.5, 0.75):
        sigma = math.sqrt(lindeberg_lambda(n, 1.0, table).sigma2)
        lam = lindeberg_lambda(n, sigma**-delta, table).lambda_value
        cells.append(f"{lam:>10.4f}")
    print(f"{n:>9,}  " + " ".join(cells))

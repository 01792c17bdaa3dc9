"""From qubit states to Pauli outcome statistics and entropic sums.

Run with: python demos/02_pauli_measurements.py
"""

import math

from pauli_uncertainty import (
    BlochVector,
    PureStateAngles,
    check_lower,
    check_upper,
    entropic_sum_renyi,
    measure_mixed,
    measure_pure,
    pauli_eigenstate,
    rho_hat,
)

ALPHA = 0.5
TWO_LN2 = 2.0 * math.log(2.0)


def show(label, triple):
    total = entropic_sum_renyi(triple, ALPHA)
    print(f"{label}")
    print(f"  x outcomes: {triple.p.probs}")
    print(f"  y outcomes: {triple.q.probs}")
    print(f"  z outcomes: {triple.r.probs}")
    print(f"  entropic sum = {total:.9f}   (gap above 2 ln 2: {total - TWO_LN2:.3g})")


# An eigenstate pins one measurement completely and leaves the other two
# mutually unbiased axes maximally random: the sum lands exactly on the
# lower bound 2 ln 2.
show("sigma_z eigenstate |0>:", measure_pure(pauli_eigenstate("z", 1)))
report = check_lower(measure_pure(pauli_eigenstate("z", 1)), ALPHA)
print(f"  certificate: {report.kind}, witness axis {report.witness_axis}")
print()

# The completely mixed state maximizes every single entropy, so the sum
# reaches the unconditional ceiling 3 ln 2.
show("completely mixed state:", measure_mixed(BlochVector(0.0, 0.0, 0.0)))
print()

# Pure states cannot reach 3 ln 2. Their ceiling is 3 rho_hat(alpha),
# attained when all three outcome pairs equal ((1 +/- 1/sqrt3)/2); in
# angles that is the diagonal line phi = pi/4 with cos 2 tau = 1/sqrt3.
tau_star = math.acos(1.0 / math.sqrt(3.0)) / 2.0
extremal = measure_pure(PureStateAngles(tau_star, math.pi / 4.0))
show("balanced extremal pure state:", extremal)
print(f"  pure-state ceiling 3 rho_hat = {3.0 * rho_hat(ALPHA):.9f}")
print(f"  certificate: {check_upper(extremal, ALPHA).kind}")

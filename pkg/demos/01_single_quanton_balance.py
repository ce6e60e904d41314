"""A single qubit: why predictability + coherence alone is not a balance.

For the one-parameter mixture w |psi><psi| + (1 - w)/2 I the two local
quantifiers P_hs and C_hs add up to (d - 1)/d = 1/2 only when the state is
pure (w = 1).  As w drops, both shrink together and the pair carries less
and less information; the linear entropy of the state is exactly what is
missing, and adding it closes the balance for every (w, x).
"""

import numpy as np

from ccrkit import ccr_mixedness, coherence_hs, linear_entropy, predictability_hs
from ccrkit.states import werner_like

print("P_hs + C_hs across the x-grid, one row per mixing weight w")
print(f"{'w':>5} {'min(P+C)':>10} {'max(P+C)':>10}")
for w in (0.0, 0.25, 0.5, 0.75, 1.0):
    totals = []
    for x in np.linspace(0, 1, 101):
        rho = werner_like(w, x)
        totals.append(predictability_hs(rho).value + coherence_hs(rho).value)
    print(f"{w:>5.2f} {min(totals):>10.4f} {max(totals):>10.4f}")

print()
print("at w = 0 the state is I/2: no wave aspect, no particle aspect,")
print("  P_hs =", predictability_hs(werner_like(0, 0.3)).value,
      " C_hs =", coherence_hs(werner_like(0, 0.3)).value)

print()
print("the missing piece is the mixedness S_l = 1 - Tr rho^2:")
print(f"{'w':>5} {'x':>5} {'P_hs':>8} {'C_hs':>8} {'S_l':>8} {'sum':>8} {'residual':>10}")
for w, x in [(0.0, 0.5), (0.5, 0.6), (0.8, 0.6), (1.0, 0.6)]:
    report = ccr_mixedness(werner_like(w, x), 0)
    print(
        f"{w:>5.2f} {x:>5.2f} {report.predictability.value:>8.4f} "
        f"{report.local_coherence.value:>8.4f} {report.correlation_term.value:>8.4f} "
        f"{report.sum:>8.4f} {report.residual:>10.2e}"
    )

print()
print("the same balance holds for every mixed state, because")
print("P_hs + C_hs = Tr rho^2 - 1/d is an algebraic identity;")
print("for example S_l of werner(0.5, 0.6):", linear_entropy(werner_like(0.5, 0.6)))

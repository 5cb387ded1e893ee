"""
Degree-6 structure and the size certificate
===========================================

When the square has maximum degree at most 6 and no recognizable edges,
a root has diameter at most 8 and at most 103 vertices. The audit checks
those limits and the per-level claims behind them on concrete roots, and
the size certificate turns the limit into a NO answer for large graphs.
"""

# %%
from collections import Counter

from graphroots.certificates.audits import audit_deg6_instance, size_certificate_deg6
from graphroots.generators import circulant, cycle, planted
from graphroots.solver import solve_max_deg6

# %%
# Audit 300 planted roots. Most planted squares do have recognizable
# edges, so only some instances fall under the hypotheses.
reasons = Counter()
worst = {"diameter": 0, "vertices": 0}
example = None
for seed in range(300):
    rep = audit_deg6_instance(planted(seed, 6 + seed % 30, "le6").root)
    if not rep.applicable:
        reasons["recognizable edge" if "recognizable" in rep.reason else rep.reason] += 1
        continue
    assert rep.ok, rep.to_text()
    reasons["applicable"] += 1
    example = example or rep
    worst["diameter"] = max(worst["diameter"], rep.stats["diameter"])
    worst["vertices"] = max(worst["vertices"], rep.stats["vertices"])
print(dict(reasons), worst)

# %%
# One full report. Claims C and D are about a long shortest path, so on
# these short roots they hold vacuously.
print(example.to_text())

# %%
# The size certificate. A long cycle and a triangle-free 6-regular
# circulant both satisfy the hypotheses and exceed 103 vertices.
print(size_certificate_deg6(cycle(120)))
out = solve_max_deg6(circulant(120, (1, 4, 11)))
print(out.status.value, out.certificate.value, "|", out.detail)

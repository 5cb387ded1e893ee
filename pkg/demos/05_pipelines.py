"""
Low-degree pipelines
====================

``solve_max_deg5`` and ``solve_max_deg6`` try their NO certificates first
and fall back to the exact solver. On planted instances they must answer
YES with a witness that checks out.
"""

# %%
import time

import numpy as np

from graphroots import solve, solve_max_deg5, solve_max_deg6, verify_outcome
from graphroots.generators import planted

# %%
for profile, pipe in (("le5", solve_max_deg5), ("le6", solve_max_deg6)):
    seconds, nodes = [], []
    for seed in range(100):
        inst = planted(seed, 10 + seed % 31, profile)
        t0 = time.perf_counter()
        out = pipe(inst.square)
        seconds.append(time.perf_counter() - t0)
        nodes.append(out.nodes)
        assert verify_outcome(inst.square, out)
        assert out.witness == solve(inst.square).witness
    seconds = np.array(seconds)
    print(
        f"{profile}: 100 YES, median {np.median(seconds) * 1e3:.2f} ms, "
        f"max {seconds.max() * 1e3:.2f} ms, max nodes {max(nodes)}"
    )

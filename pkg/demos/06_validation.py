#!/usr/bin/env python3
"""Run the full identity battery programmatically.

Same suites as `emwavelets validate`: geometry identities, cut-sign flips,
wave/Maxwell residual convergence, oracle equivalence, impulse closed
forms, the Coulomb disk, beam diagnostics, interior continuity, source
approximations, spectra, analyticity, surface charge conservation, and
byte-level determinism.
"""

import time

from emwavelets.harness.config import default_config
from emwavelets.harness.validate import run_all

t0 = time.perf_counter()
results = run_all(default_config(), seed=0)
for res in results:
    print(res.line())
total = time.perf_counter() - t0
ok = sum(r.passed for r in results)
print(f"\n{ok}/{len(results)} suites passed in {total:.1f}s")

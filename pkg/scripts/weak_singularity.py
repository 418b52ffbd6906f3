"""Error of PV int_{-1}^{1} |x|^(-1/2) dx = 4 against degree and node count.

Separates the two error sources: truncation at degree n, and the Gauss
sampling of an unbounded integrand with M nodes.
"""

import math

from chebpv.pv_core import Integrand, PVConfig, pv_integrate

g = Integrand(lambda x: abs(x) ** -0.5, p=0.5)

print("degree,nodes,value,abs_err")
for n in (16, 32, 64, 128, 256):
    for m in (None, 4096, 65536):
        if m is not None and m < n + 1:
            continue
        cfg = PVConfig(degree=n, node_count=m)
        value = pv_integrate(g, cfg).value
        print(f"{n},{cfg.nodes},{value:.17g},{abs(value - 4.0):.3e}")

# fit of the default-node error against M
errs = [(PVConfig(degree=n).nodes, abs(pv_integrate(g, PVConfig(degree=n)).value - 4.0))
        for n in (64, 256)]
(m1, e1), (m2, e2) = errs
print(f"# observed order in M at default nodes: {math.log(e1 / e2) / math.log(m2 / m1):.3f}")

#!/usr/bin/env python

print("loading required tgx modules")
from tgx.core import analysis, oracle, planner
from tgx.core.instance_classes import gen_random_routes, gen_transport
from tgx.core.validation import validate_exploration
from tgx.tools import file_interface

print("generating a transport network")
n = 8
routes = gen_random_routes(n, num_routes=3, max_period=5, seed=42)
longest = max(route.period for route in routes)
g = gen_transport(routes, n, planner.transport_bound(n, longest))
file_interface.write_tg1_file("transport.tg1", g)

print("computing edge frequencies")
table = analysis.frequency_table(g, with_regularity=True)
print("\n".join(table.lines()))
print("max frequency:", table.max_frequency)

print("planning an exploration from vertex 0")
result = planner.explore(g, 0)
print(result.report.pretty_str())
assert validate_exploration(g, result.walk, 0).ok

print("comparing against the exact optimum")
best = oracle.fastest_exploration(g, 0)
print(best.pretty_str(), "vs. planner:", result.walk.length)

print("loading plot modules")
from tgx.tools import plot

plot_collection = plot.PlotCollection("Example")
plot_collection.add_figure(
    "activations", plot.activation_figure(g, result.walk,
                                          title="planned exploration"))
plot_collection.show()

from pathlib import Path

import omtense

data = Path(__file__).parent / "Data"

fig1 = omtense.build_lattice(omtense.read_lattice(data / "fig1.lat"))
le5 = omtense.read_frame(data / "le5.frm")

ops = omtense.frame_induced_quadruple(fig1, le5)
propositions = omtense.read_propositions(data / "example1.prop", fig1, le5.points)

for name, q in propositions.items():
    print(f"{name} = {q.render(fig1)}")
    print(f"P({name}) = {ops.P(q).render(fig1)}")
    print(f"F({name}) = {ops.F(q).render(fig1)}")
    print(f"H({name}) = {ops.H(q).render(fig1)}")
    print(f"G({name}) = {ops.G(q).render(fig1)}")

a, b = fig1.index("a"), fig1.index("b")

print(fig1.name_of(omtense.sasaki_and(fig1, a, b)))
print(fig1.name_of(omtense.sasaki_imp(fig1, a, b)))

print(omtense.roundtrip_frame(fig1, le5).to_text())

for report in omtense.run_suites([omtense.Suite.THM1, omtense.Suite.THM2, omtense.Suite.PROP1], omtense.Instance(fig1, le5)):
    print(report.to_text())

print(omtense.demo("example2"))

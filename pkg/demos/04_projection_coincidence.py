"""When does a generated order coincide with a projection order?

Two total orders coincide when they rank every pair of intervals the same
way.  Orders generated by midpoint-projection pairs (midpoint, B) collapse
onto the (0.5, 1) projection order when B is strictly Schur-convex, and onto
(0.5, 0) when strictly Schur-concave.  Away from that situation the two
notions genuinely diverge: the square/sqrt pair below disagrees with every
projection order.
"""

from intervalorders import (
    AlphaBetaOrder,
    GeneratedPairOrder,
    Interval,
    compare,
    k_alpha_crossover,
    midpoint_order_coincidence,
    orders_coincide,
    power,
    projection_disagreement_witness,
    schur_pair_mean,
)

square = schur_pair_mean(power(2.0))   # A(z) = 0.5 (z1^2 + z2^2)
sqrt = schur_pair_mean(power(0.5))     # B(z) = 0.5 (sqrt z1 + sqrt z2)
pair_order = GeneratedPairOrder(square, sqrt)
print("pair admissibility:", pair_order.verdict.outcome.value,
      f"(rule: {pair_order.verdict.rule})")

u1, x1 = Interval(0.36, 0.82), Interval(0.08, 0.92)
u2, x2 = Interval(0.27, 0.71), Interval(0.57, 0.59)
print(f"\nA({u1}) = {square(u1):.4f} < A({x1}) = {square(x1):.4f}"
      "  -> the pair order puts u below x")

# but the projection comparison flips depending on the weight
t1 = k_alpha_crossover(u1, x1)
t2 = k_alpha_crossover(u2, x2)
print(f"projections of the first pair tie at alpha = {t1:.6f} (= 14/19)")
print(f"projections of the second pair tie at alpha = {t2:.6f} (= 5/7)")
print("below 14/19 the first pair disagrees with the projection order;"
      " above 5/7 the second does -- together they cover every weight")

for alpha in (0.70, 0.71, 0.72, 0.73, 0.74):
    rep = orders_coincide(pair_order, AlphaBetaOrder(alpha, 1.0), resolution=60,
                          candidates=[(u1, x1), (u2, x2)])
    w = rep.witness
    print(f"  alpha = {alpha:.2f}: disagreement at {w.u} vs {w.x} "
          f"({w.first.name.lower()} / {w.second.name.lower()})")

print("\n== midpoint pairs that do coincide ==")
rep = midpoint_order_coincidence(square, resolution=80)
print(f"(midpoint, square-mean) vs (0.5, 1): coincide={rep.coincide}, "
      f"certainty={rep.certainty}")
rep = midpoint_order_coincidence(sqrt, resolution=80)
print(f"(midpoint, sqrt-mean)   vs (0.5, 0): coincide={rep.coincide}, "
      f"certainty={rep.certainty}")

print("\n== constructive disagreement for any projection weight ==")
for alpha in (0.0, 0.25, 0.5):
    u, x = projection_disagreement_witness(power(2.0), alpha, 1.0)
    p = AlphaBetaOrder(alpha, 1.0)
    print(f"  alpha = {alpha:.2f}: {u} vs {x}: pair order says "
          f"{compare(pair_order, u, x).name.lower()}, projection order says "
          f"{compare(p, u, x).name.lower()}")

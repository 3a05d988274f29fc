# El `main.py` sirve para comprobar de un vistazo que funciona el código

from edge_maximal import (audit_maximal, build_M, build_NT, build_one_max_partition,
                          build_one_max_star, complete_hypergraph, edge_connectivity,
                          enumerate_maximal, extremal_scan, is_k_edge_maximal,
                          is_super_edge_connected, lower_bound, path_tree, star_tree, strength,
                          threshold_t, upper_bound)

# ====================== params.py ======================
# Threshold t(k, r) for a few parameter pairs
for k, r in [(2, 2), (3, 3), (4, 3), (6, 3)]:
    print(f"t({k}, {r}) = {threshold_t(k, r)}")
print("\n ================ \n")
# Output:
# t(2, 2) = 3
# t(3, 3) = 4
# t(4, 3) = 4
# t(6, 3) = 5

# ====================== connectivity.py / strength.py ======================
k53 = complete_hypergraph(5, 3)
kappa, cut = edge_connectivity(k53)
value, tree = strength(k53)
print(k53)
print(f"kappa' = {kappa}, minimum cut {cut}")
print(f"strength = {value}")
print(tree.to_text())
print(f"super-edge-connected: {is_super_edge_connected(k53)[0]}")
print("\n ================ \n")

# ====================== extremal.py ======================
# Upper-bound family: n = 7, k = 3, r = 3 has C(4, 3) + 3 * 3 = 13 edges
h = build_M(7, 3, 3)
print(h)
print(is_k_edge_maximal(h, 3))
print(f"bounds: {lower_bound(7, 3, 3)} <= {h.m} <= {upper_bound(7, 3, 3)}")
print(audit_maximal(h, 3).to_text())
print("\n ================ \n")

# K_5^3 is too well connected to be 3-edge-maximal
print(is_k_edge_maximal(k53, 3))
print("\n ================ \n")

# ====================== constructions.py ======================
# Lower-bound family on a path and on a star of three blocks of K_4^3
for tree_spec in (path_tree(3), star_tree(3)):
    nt, k = build_NT(4, 3, tree_spec)
    print(f"{nt} (k={k}), lower bound {lower_bound(nt.n, k, 3)}")

# 1-edge-maximal families
print(build_one_max_star(7, 3).to_text())
print(build_one_max_partition(7, 3).to_text())
print("\n ================ \n")

# ====================== search.py ======================
# Modifica las siguientes líneas a conveniencia para probar otros parámetros
summary, found = enumerate_maximal(5, 3, 3, verbose=True)
print(summary.to_text())
print(found[0].to_text())

scan = extremal_scan([(4, 2, 2), (4, 3, 3), (5, 3, 3), (6, 2, 2)], jobs=2, verbose=True)
print(scan.to_string(index=False))

//! Facts the replay takes on trust. Each check lists the ones it leans on;
//! the rest belong to parts of the classification with no lattice content.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Axiom {
    pub id: &'static str,
    pub statement: &'static str,
    /// Check ids that depend on this fact; empty when nothing is replayed.
    pub used_by: &'static [&'static str],
}

pub const AXIOMS: &[Axiom] = &[
    Axiom {
        id: "bicanonical-pullback",
        statement: "phi: S -> Sigma is the bicanonical morphism onto a quartic del Pezzo surface in P^4, so phi^*(-K_Sigma) = 2K_S and R = K_S - phi^*(K_Sigma) = 3K_S",
        used_by: &["ramification.r1", "ramification.r2", "ramification.r3", "step1"],
    },
    Axiom {
        id: "finite-ample",
        statement: "phi is finite and K_S is ample, hence K_S.C > 0 for every curve C on S",
        used_by: &["ramification.r1", "ramification.r2", "ramification.r3", "step1", "invariants"],
    },
    Axiom {
        id: "betti-numbers",
        statement: "b_1(S) = 2q(S) and e(S) = 2 - 2b_1 + b_2; a nondegenerate Gram matrix of rank r forces b_2 >= r",
        used_by: &["finiteness"],
    },
    Axiom {
        id: "line-pullbacks",
        statement: "for a line C on Sigma, phi^*(C) is either a reduced smooth rational (-4)-curve or 2E with E^2 = -1 and K_S.E = 1",
        used_by: &["ramification.r1", "ramification.r2", "ramification.r3", "c1c2c3", "step1"],
    },
    Axiom {
        id: "miyaoka",
        statement: "r disjoint smooth rational (-4)-curves on a minimal surface of general type satisfy 25r/12 <= c_2 - K^2/3",
        used_by: &["miyaoka"],
    },
    Axiom {
        id: "cremona-realized",
        statement: "the reflection in l - e_i - e_j - e_k is induced by the quadratic transformation of P^2 centred at p_i, p_j, p_k, an isomorphism of Sigma onto a blow-up of five general points",
        used_by: &["cremona"],
    },
    Axiom {
        id: "effective-cone",
        statement: "the effective cone of Sigma is generated by its 16 lines, and nef classes on Sigma are base-point free with h^1 = h^2 = 0",
        used_by: &["ne1e", "invariants", "c1c2c3", "fijki", "burniat"],
    },
    Axiom {
        id: "moving-part-descent",
        statement: "for finite phi: T' -> T, a divisor h with |phi^* h| = phi^*|h|, and M without fixed part with phi^* h - M effective, |M| = phi^*|m| for some m with h - m effective",
        used_by: &[],
    },
    Axiom {
        id: "double-cover-formulas",
        statement: "a smooth double cover Y -> S branched on B = 2L has K_Y^2 = 2(K_S + L)^2, chi(O_Y) = 2chi(O_S) + L.(K_S + L)/2 and p_g(Y) = p_g(S) + h^0(K_S + L)",
        used_by: &["c1c2c3", "fijki"],
    },
    Axiom {
        id: "pullback-sections",
        statement: "h^0(S, phi^*(a) + E) >= h^0(Sigma, a) for every effective divisor E on S",
        used_by: &["c1c2c3", "fijki"],
    },
    Axiom {
        id: "irregular-bound",
        statement: "the double covers Y considered satisfy K_Y^2 >= 16(q(Y) - 1)",
        used_by: &["c1c2c3"],
    },
    Axiom {
        id: "albanese-pencil",
        statement: "if q(Y) >= 1, the Albanese pencil of Y is the pullback of a pencil |F| on S whose general member has disconnected preimage in Y",
        used_by: &[],
    },
    Axiom {
        id: "bidouble-formulas",
        statement: "a smooth (Z/2)^2-cover of Sigma branched on D_1 + D_2 + D_3 has K^2 = (2K_Sigma + sum D_i)^2, chi = 4chi(O_Sigma) + sum L_i.(K_Sigma + L_i)/2 and p_g = p_g(Sigma) + sum h^0(K_Sigma + L_i)",
        used_by: &["burniat"],
    },
    Axiom {
        id: "vanishing-2k",
        statement: "h^i(S, 2K_S) = 0 for i > 0, and restriction to the disjoint rational curves E_4 + E_5 gives h^i(S, 2K_S + E_4 + E_5) = 0 for i > 0",
        used_by: &["invariants"],
    },
    Axiom {
        id: "torsion-nontrivial",
        statement: "eta_1, eta_2, eta_3 are nonzero 2-torsion classes, pairwise distinct",
        used_by: &["invariants"],
    },
    Axiom {
        id: "torsion-restrictions",
        statement: "on a general F_i: (-eta + eta_j)|F_i is trivial for i != j, eta_i|F_i is trivial, (-eta + eta_i)|F_i is nontrivial",
        used_by: &[],
    },
    Axiom {
        id: "fibre-connected",
        statement: "a general member of |F_i| is a smooth connected curve; its genus 3 follows from adjunction",
        used_by: &["step1"],
    },
    Axiom {
        id: "fibrations-through-e4-e5",
        statement: "a fibration S -> P^1 with E_4 and E_5 in fibres is induced by one of |F_1|, |F_2|, |F_3|",
        used_by: &[],
    },
    Axiom {
        id: "extra-double-fibre",
        statement: "a further double fibre 2M of u_3 has M reduced and irreducible with phi ramified along M",
        used_by: &["step1"],
    },
    Axiom {
        id: "cyclic-fibrations",
        statement: "with u_{s_i} the fibration attached to Y_i, the map i -> s_i is a 3-cycle on {1, 2, 3}",
        used_by: &[],
    },
    Axiom {
        id: "nonreduced-g3-h3",
        statement: "phi^*(g_3) and phi^*(h_3) are non-reduced",
        used_by: &[],
    },
    Axiom {
        id: "hyperelliptic-fibres",
        statement: "a general F_i is hyperelliptic for i = 1, 2, 3",
        used_by: &[],
    },
    Axiom {
        id: "galois-group",
        statement: "phi is a Galois cover with group Z/2 x Z/2 generated by the fibrewise hyperelliptic involutions",
        used_by: &[],
    },
    Axiom {
        id: "branch-components",
        statement: "the branch divisor B of phi satisfies B <= -3K_Sigma and contains e_i + e'_i + g_i + h_i, and the fixed curve of the i-th involution maps to e_i + e'_i + g_{i+1} + h_{i+1}",
        used_by: &["burniat"],
    },
    Axiom {
        id: "general-position",
        statement: "five points of P^2 with no three collinear blow up to a del Pezzo surface of degree 4",
        used_by: &["burniat", "lines"],
    },
];

pub fn lookup(id: &str) -> Option<&'static Axiom> {
    AXIOMS.iter().find(|a| a.id == id)
}

/// `"id: statement"`, the form stored in a report's `axioms_used`.
pub fn cite(id: &str) -> String {
    let a = lookup(id).unwrap_or_else(|| panic!("unknown axiom {id}"));
    format!("{}: {}", a.id, a.statement)
}

/// The id part of a string produced by [`cite`].
pub fn cited_id(entry: &str) -> &str {
    entry.split_once(':').map_or(entry, |(id, _)| id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        for (i, a) in AXIOMS.iter().enumerate() {
            assert!(AXIOMS[i + 1..].iter().all(|b| b.id != a.id), "{}", a.id);
        }
    }

    #[test]
    fn cite_round_trips() {
        let c = cite("miyaoka");
        assert_eq!(cited_id(&c), "miyaoka");
        assert!(c.contains("25r/12"));
    }
}

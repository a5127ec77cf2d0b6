//! Named verification suites, split into independent tasks.

use clap::ValueEnum;
use qplane_core::actions::{adjoint_suite, relation_suite, tx_conjugation_check};
use qplane_core::intertwiners::{
    casimir_separation_check, cg_check, classical_limit_check, lowest_weight_check, phi_psi_check, psi_basis_check,
    psi_intertwining_check, psi_tx_lowering_check, qrc_adjoint_check, qrc_degree_check, qrc_intertwining_check,
    qrc_symbol_check, uniqueness_check, ClassicalLimit,
};
use qplane_core::plane::phi_bijection_check;
use qplane_core::special::{
    jacobi_check, qhahn_algebra_check, qhahn_diffop_check, qhahn_tridiagonal_check, qhahn_values_check, Realization,
};
use qplane_core::verify::{Report, Verifier};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    /// Δ(F) P_n = 0 and the K-weight of P_n.
    LowestWeight,
    /// φ and φ⁻¹ are mutually inverse on monomials.
    Phi,
    /// φ([λ]_n t^{n+k} j_n) = q^{nλ} (x + q^λ y)^k P_n.
    PhiPsi,
    /// The three forms of j_n and its eigen-equation.
    Jacobi,
    /// The (t, X) action against the conjugated plane action, Casimir eigenvalues.
    TxAction,
    /// Clebsch–Gordan expansions in both pictures.
    Cg,
    /// q-Hahn difference equation and three-term recurrence.
    Qhahn,
    /// q-Hahn algebra relations in both realizations.
    QhahnAlgebra,
    /// U_q(sl2) relations and Casimir centrality on every realization.
    Relations,
    /// Fischer adjoints of D_{q²}, ev, r_x, r_y and the contragredient actions.
    Adjoint,
    /// The q-Rankin–Cohen brackets as adjoints of Ψ_n.
    Qrc,
    /// One lowest-weight vector per level, and Ψ_n(z^k) spanning the plane.
    Uniqueness,
    /// Floating-point q → 1 limit of the brackets.
    ClassicalLimit,
    All,
}

impl Suite {
    pub const EACH: [Suite; 13] = [
        Suite::LowestWeight,
        Suite::Phi,
        Suite::PhiPsi,
        Suite::Jacobi,
        Suite::TxAction,
        Suite::Cg,
        Suite::Qhahn,
        Suite::QhahnAlgebra,
        Suite::Relations,
        Suite::Adjoint,
        Suite::Qrc,
        Suite::Uniqueness,
        Suite::ClassicalLimit,
    ];

    pub fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}

/// Largest `k` in `φ([λ]_n t^{n+k} j_n)`.
pub const PHI_PSI_MAX_K: u32 = 4;

#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    /// Level `n` of lowest-weight vectors and brackets.
    pub max_n: u32,
    /// Truncation degree `D` of the polynomial spaces.
    pub max_degree: u32,
    /// Weight `N` of the Clebsch–Gordan and q-Hahn spaces.
    pub big_n: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_n: 8, max_degree: 10, big_n: 8 }
    }
}

type Job = Box<dyn Fn(&Verifier) -> Vec<Report> + Send + Sync>;

pub struct Task {
    pub suite: Suite,
    job: Job,
}

impl Task {
    pub fn run(&self, v: &Verifier) -> Vec<Report> {
        (self.job)(v)
    }
}

fn one(suite: Suite, f: impl Fn(&Verifier) -> Report + Send + Sync + 'static) -> Task {
    Task { suite, job: Box::new(move |v| vec![f(v)]) }
}

fn many(suite: Suite, f: impl Fn(&Verifier) -> Vec<Report> + Send + Sync + 'static) -> Task {
    Task { suite, job: Box::new(f) }
}

/// The tasks of one suite. `All` expands to every suite.
pub fn tasks(suite: Suite, b: Bounds, limit: ClassicalLimit) -> Vec<Task> {
    let Bounds { max_n, max_degree: d, big_n } = b;
    let s = suite;
    match suite {
        Suite::All => Suite::EACH.iter().flat_map(|&s| tasks(s, b, limit)).collect(),
        Suite::LowestWeight => vec![one(s, move |v| lowest_weight_check(max_n, v))],
        Suite::Phi => vec![one(s, move |v| phi_bijection_check(d, v))],
        Suite::PhiPsi => vec![one(s, move |v| phi_psi_check(max_n, PHI_PSI_MAX_K, v))],
        Suite::Jacobi => vec![one(s, move |v| jacobi_check(d, v))],
        Suite::TxAction => vec![
            one(s, move |v| tx_conjugation_check(max_n, v)),
            one(s, move |v| casimir_separation_check(max_n, v)),
            one(s, move |v| psi_tx_lowering_check(max_n, v)),
            one(s, move |v| psi_intertwining_check(max_n, PHI_PSI_MAX_K, v)),
        ],
        Suite::Cg => (1..=big_n).flat_map(|n| (0..=n).map(move |k| one(s, move |v| cg_check(k, n, v)))).collect(),
        Suite::Qhahn => (1..=big_n)
            .flat_map(|n| {
                let diffops = (0..=n).map(move |k| one(s, move |v| qhahn_diffop_check(k, n, v)));
                [one(s, move |v| qhahn_values_check(n, v)), one(s, move |v| qhahn_tridiagonal_check(n, v))]
                    .into_iter()
                    .chain(diffops)
            })
            .collect(),
        Suite::QhahnAlgebra => (1..=big_n)
            .flat_map(|n| {
                [Realization::TxPicture, Realization::Tensor].map(|r| one(s, move |v| qhahn_algebra_check(r, n, v)))
            })
            .collect(),
        Suite::Relations => vec![many(s, move |v| relation_suite(d, v))],
        Suite::Adjoint => vec![many(s, move |v| adjoint_suite(d, v))],
        Suite::Qrc => {
            let mut out: Vec<Task> = (0..=max_n)
                .flat_map(|n| {
                    [
                        one(s, move |v| qrc_adjoint_check(n, d, v)),
                        one(s, move |v| qrc_intertwining_check(n, d, v)),
                        one(s, move |v| qrc_symbol_check(n, d, v)),
                    ]
                })
                .collect();
            out.push(one(s, move |v| qrc_degree_check(max_n, d, v)));
            out
        }
        Suite::Uniqueness => {
            vec![one(s, move |v| uniqueness_check(max_n, d.max(max_n), v)), one(s, move |v| psi_basis_check(d, v))]
        }
        Suite::ClassicalLimit => vec![one(s, move |v| classical_limit_check(&limit, v.poison))],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_kebab_case() {
        assert_eq!(Suite::QhahnAlgebra.name(), "qhahn-algebra");
        assert_eq!(Suite::ClassicalLimit.name(), "classical-limit");
        assert_eq!(Suite::EACH.len() + 1, Suite::value_variants().len());
    }

    #[test]
    fn small_bounds_pass() {
        let b = Bounds { max_n: 2, max_degree: 3, big_n: 2 };
        let v = Verifier::symbolic();
        for t in tasks(Suite::All, b, ClassicalLimit::default()) {
            for r in t.run(&v) {
                assert!(r.passed(), "{}", serde_json::to_string(&r).unwrap());
            }
        }
    }
}

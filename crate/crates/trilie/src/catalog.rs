//! Built-in named instances: the classified small algebras and coalgebras,
//! the worked bialgebra examples, the classification representatives at
//! dimension 3 with their equivalence maps, and the grid enumeration that
//! reproduces the classification.
//!
//! Catalog names are a stable public API:
//!
//! | name | object |
//! |------|--------|
//! | `L_a2`, `L_a3`, `L_a4`, `abelian` | abelian algebras (dims 2, 3, 4; `abelian` = dim 3) |
//! | `L_b` | dim 3, `[e1,e2,e3] = e1` |
//! | `L_b1`, `L_b2`, `L_c1`, `L_c2(alpha)`, `L_c3`, `L_d`, `L_e` | the dim-4 algebra classes |
//! | `C_a2`, `C_a3`, `C_a4` | trivial coalgebras |
//! | `C_b`, `C_b1`, `C_b2`, `C_c1`, `C_c2(alpha)`, `C_c3`, `C_d`, `C_e` | the coalgebra classes |
//! | `ex2.5` | dim-5 algebra with a nontrivial dual |
//! | `ex2.6(alpha)` | dim-4 coalgebra family |
//! | `ex3.2`, `ex3.4` | a dim-4 bialgebra and its dual |
//! | `ex3.7.mu`, `ex3.7.delta1..3`, `ex3.7.B1..3`, `ex3.7.f` | the dim-4 equivalence example |
//! | `thm43.delta1..6`, `B_thm43_*`, `thm43.f1`, `thm43.f2` | dim-3 classification data |

use crate::algebra::{algebra_from_int_brackets, ThreeLieAlgebra};
use crate::bialgebra::{check_compatibility, dual_bialgebra, dual_bialgebra_unchecked, ThreeLieBialgebra};
use crate::coalgebra::{coalgebra_from_int_cobrackets, ThreeLieCoalgebra};
use crate::duality::dual_of_algebra;
use crate::equivalence::{
    fingerprint, search_equivalence, verify_equivalence, LinearIso, SearchFamily,
};
use crate::linalg::{unit_vector, vector_neg, vector_scale};
use crate::scalar::ExactScalar;
use crate::tensor::AlternatingTrivector;
use crate::Error;

/// A named object from the built-in catalog.
#[derive(Clone, Debug)]
pub enum CatalogObject {
    Algebra(ThreeLieAlgebra),
    Coalgebra(ThreeLieCoalgebra),
    Bialgebra(ThreeLieBialgebra),
    Iso(LinearIso),
}

impl CatalogObject {
    pub fn kind(&self) -> &'static str {
        match self {
            CatalogObject::Algebra(_) => "algebra",
            CatalogObject::Coalgebra(_) => "coalgebra",
            CatalogObject::Bialgebra(_) => "bialgebra",
            CatalogObject::Iso(_) => "map",
        }
    }
}

/// A catalog entry: the object, its parameter when the family is
/// parametric, and an optional note where the stored constants correct a
/// commonly printed misprint.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub object: CatalogObject,
    pub alpha: Option<ExactScalar>,
    pub note: Option<&'static str>,
    pub nonexample: bool,
}

impl CatalogEntry {
    fn plain(name: &str, object: CatalogObject) -> Self {
        CatalogEntry {
            name: name.to_string(),
            object,
            alpha: None,
            note: None,
            nonexample: false,
        }
    }

    fn with_alpha(mut self, alpha: ExactScalar) -> Self {
        self.alpha = Some(alpha);
        self
    }

    fn with_note(mut self, note: &'static str) -> Self {
        self.note = Some(note);
        self
    }
}

/// Names that require an `alpha` parameter.
pub const PARAMETRIC: &[&str] = &["L_c2", "C_c2", "ex2.6"];

/// Stable list of catalog names.
pub fn names() -> &'static [&'static str] {
    &[
        "abelian", "L_a2", "L_a3", "L_a4", "L_b", "L_b1", "L_b2", "L_c1", "L_c2", "L_c3",
        "L_d", "L_e", "ex2.5", "ex3.7.mu", "C_a2", "C_a3", "C_a4", "C_b", "C_b1", "C_b2",
        "C_c1", "C_c2", "C_c3", "C_d", "C_e", "ex2.6", "ex3.7.delta1", "ex3.7.delta2",
        "ex3.7.delta3", "thm43.delta1", "thm43.delta2", "thm43.delta3", "thm43.delta4",
        "thm43.delta5", "thm43.delta6", "ex3.2", "ex3.4", "ex3.7.B1", "ex3.7.B2",
        "ex3.7.B3", "B_thm43_0_0", "B_thm43_0_delta1", "B_thm43_mu_b_0",
        "B_thm43_mu_b_delta1", "B_thm43_mu_b_delta2", "B_thm43_mu_b_delta3",
        "B_thm43_mu_b_delta4", "B_thm43_mu_b_delta5", "B_thm43_mu_b_delta6", "thm43.f1",
        "thm43.f2", "ex3.7.f",
    ]
}

fn l_b() -> ThreeLieAlgebra {
    algebra_from_int_brackets(3, &[((1, 2, 3), &[(1, 1)])])
}

fn l_c1() -> ThreeLieAlgebra {
    algebra_from_int_brackets(4, &[((2, 3, 4), &[(1, 1)]), ((1, 3, 4), &[(1, 2)])])
}

fn l_c2(alpha: &ExactScalar) -> ThreeLieAlgebra {
    let mut v234 = vector_scale(alpha, &unit_vector(4, 1));
    v234[1] = ExactScalar::one();
    ThreeLieAlgebra::from_brackets(4, &[((2, 3, 4), v234), ((1, 3, 4), unit_vector(4, 2))])
        .expect("well-formed")
}

fn c_c2(alpha: &ExactScalar) -> ThreeLieCoalgebra {
    let mut d1 = AlternatingTrivector::zero(4);
    d1.add_wedge(2, 3, 4, alpha.clone()).expect("in range");
    let mut d2 = AlternatingTrivector::zero(4);
    d2.add_wedge(2, 3, 4, ExactScalar::one()).expect("in range");
    d2.add_wedge(1, 3, 4, ExactScalar::one()).expect("in range");
    ThreeLieCoalgebra::from_cobrackets(4, &[(1, d1), (2, d2)]).expect("well-formed")
}

fn ex2_6(alpha: &ExactScalar) -> ThreeLieCoalgebra {
    let mut d2 = AlternatingTrivector::zero(4);
    d2.add_wedge(3, 1, 4, alpha.clone()).expect("in range");
    let mut d3 = AlternatingTrivector::zero(4);
    d3.add_wedge(3, 1, 4, ExactScalar::one()).expect("in range");
    d3.add_wedge(2, 1, 4, ExactScalar::one()).expect("in range");
    ThreeLieCoalgebra::from_cobrackets(4, &[(2, d2), (3, d3)]).expect("well-formed")
}

fn ex2_5() -> ThreeLieAlgebra {
    algebra_from_int_brackets(
        5,
        &[
            ((2, 3, 4), &[(1, 1)]),
            ((3, 4, 5), &[(1, 3), (2, 2)]),
            ((2, 4, 5), &[(1, 3)]),
            ((1, 4, 5), &[(1, 1)]),
        ],
    )
}

fn ex3_2() -> ThreeLieBialgebra {
    let algebra =
        algebra_from_int_brackets(4, &[((1, 3, 4), &[(1, 1)]), ((2, 3, 4), &[(1, 2)])]);
    let coalgebra = coalgebra_from_int_cobrackets(
        4,
        &[(1, &[(1, (3, 2, 4))]), (3, &[(1, (1, 2, 4))])],
    );
    ThreeLieBialgebra::new(algebra, coalgebra).expect("dims agree")
}

fn ex3_7_delta(which: usize) -> ThreeLieCoalgebra {
    match which {
        1 => coalgebra_from_int_cobrackets(
            4,
            &[(1, &[(1, (1, 2, 4))]), (3, &[(1, (3, 2, 4))])],
        ),
        2 => coalgebra_from_int_cobrackets(
            4,
            &[(1, &[(1, (1, 4, 2))]), (3, &[(1, (3, 4, 2))])],
        ),
        3 => coalgebra_from_int_cobrackets(
            4,
            &[(2, &[(1, (2, 3, 1))]), (4, &[(1, (4, 3, 1))])],
        ),
        _ => unreachable!(),
    }
}

fn ex3_7_f() -> LinearIso {
    LinearIso::from_images(&[
        unit_vector(4, 2),
        vector_neg(&unit_vector(4, 1)),
        unit_vector(4, 4),
        unit_vector(4, 3),
    ])
    .expect("invertible")
}

/// The dim-3 cobracket sending `e_l` to `a_l` times the top wedge.
pub fn dim3_cobracket(coefficients: &[ExactScalar; 3]) -> ThreeLieCoalgebra {
    let mut list = Vec::new();
    for (l, a) in coefficients.iter().enumerate() {
        if !a.is_zero() {
            let mut t = AlternatingTrivector::zero(3);
            t.add_wedge(1, 2, 3, a.clone()).expect("in range");
            list.push((l + 1, t));
        }
    }
    ThreeLieCoalgebra::from_cobrackets(3, &list).expect("well-formed")
}

fn thm43_delta(which: usize) -> ThreeLieCoalgebra {
    let table: [(usize, (usize, usize, usize)); 6] = [
        (1, (1, 2, 3)),
        (2, (2, 3, 1)),
        (1, (1, 3, 2)),
        (2, (2, 1, 3)),
        (3, (3, 1, 2)),
        (3, (3, 2, 1)),
    ];
    let (l, (i, j, k)) = table[which - 1];
    coalgebra_from_int_cobrackets(3, &[(l, &[(1, (i, j, k))])])
}

fn thm43_bialgebra(nonabelian: bool, delta: usize) -> ThreeLieBialgebra {
    let algebra = if nonabelian {
        l_b()
    } else {
        ThreeLieAlgebra::abelian(3)
    };
    let coalgebra = if delta == 0 {
        ThreeLieCoalgebra::zero(3)
    } else {
        thm43_delta(delta)
    };
    ThreeLieBialgebra::new(algebra, coalgebra).expect("dims agree")
}

fn thm43_f(which: usize) -> LinearIso {
    match which {
        1 => LinearIso::from_images(&[
            unit_vector(3, 1),
            unit_vector(3, 3),
            vector_neg(&unit_vector(3, 2)),
        ]),
        2 => LinearIso::from_images(&[
            unit_vector(3, 1),
            vector_neg(&unit_vector(3, 2)),
            vector_neg(&unit_vector(3, 3)),
        ]),
        _ => unreachable!(),
    }
    .expect("invertible")
}

/// Looks up a catalog entry by name. Parametric families (`L_c2`, `C_c2`,
/// `ex2.6`) require `alpha`; `L_c2` and `C_c2` additionally require it to
/// be nonzero. Every other name rejects a supplied parameter.
pub fn get(name: &str, alpha: Option<&ExactScalar>) -> Result<CatalogEntry, Error> {
    if PARAMETRIC.contains(&name) {
        let a = alpha.ok_or_else(|| Error::MissingAlpha(name.to_string()))?;
        if a.is_zero() && name != "ex2.6" {
            return Err(Error::ForbiddenAlpha(name.to_string()));
        }
        let entry = match name {
            "L_c2" => CatalogEntry::plain(name, CatalogObject::Algebra(l_c2(a))),
            "C_c2" => CatalogEntry::plain(name, CatalogObject::Coalgebra(c_c2(a))),
            "ex2.6" => CatalogEntry::plain(name, CatalogObject::Coalgebra(ex2_6(a)))
                .with_note(
                    "dual bracket values live on the argument triples (e3,e1,e4) and \
                     (e2,e1,e4); a common misprint shows the first as (e2,e3,e4)",
                ),
            _ => unreachable!("PARAMETRIC names are matched above"),
        };
        return Ok(entry.with_alpha(a.clone()));
    }
    if alpha.is_some() {
        return Err(Error::UnexpectedAlpha(name.to_string()));
    }
    let algebra = CatalogObject::Algebra;
    let coalgebra = CatalogObject::Coalgebra;
    let entry = match name {
        "abelian" | "L_a3" => CatalogEntry::plain(name, algebra(ThreeLieAlgebra::abelian(3))),
        "L_a2" => CatalogEntry::plain(name, algebra(ThreeLieAlgebra::abelian(2))),
        "L_a4" => CatalogEntry::plain(name, algebra(ThreeLieAlgebra::abelian(4))),
        "L_b" => CatalogEntry::plain(name, algebra(l_b())),
        "L_b1" => CatalogEntry::plain(
            name,
            algebra(algebra_from_int_brackets(4, &[((2, 3, 4), &[(1, 1)])])),
        ),
        "L_b2" => CatalogEntry::plain(
            name,
            algebra(algebra_from_int_brackets(4, &[((1, 2, 3), &[(1, 1)])])),
        ),
        "L_c1" | "ex3.7.mu" => CatalogEntry::plain(name, algebra(l_c1())),
        "L_c3" => CatalogEntry::plain(
            name,
            algebra(algebra_from_int_brackets(
                4,
                &[((1, 3, 4), &[(1, 1)]), ((2, 3, 4), &[(1, 2)])],
            )),
        ),
        "L_d" => CatalogEntry::plain(
            name,
            algebra(algebra_from_int_brackets(
                4,
                &[
                    ((2, 3, 4), &[(1, 1)]),
                    ((1, 3, 4), &[(1, 2)]),
                    ((1, 2, 4), &[(1, 3)]),
                ],
            )),
        ),
        "L_e" => CatalogEntry::plain(
            name,
            algebra(algebra_from_int_brackets(
                4,
                &[
                    ((2, 3, 4), &[(1, 1)]),
                    ((1, 3, 4), &[(1, 2)]),
                    ((1, 2, 4), &[(1, 3)]),
                    ((1, 2, 3), &[(1, 4)]),
                ],
            )),
        ),
        "ex2.5" => CatalogEntry::plain(name, algebra(ex2_5())).with_note(
            "the dual cobracket of e2 is 2 e3^e4^e5; presentations showing a free \
             coefficient here are inconsistent with the bracket table",
        ),
        "C_a2" => CatalogEntry::plain(name, coalgebra(ThreeLieCoalgebra::zero(2))),
        "C_a3" => CatalogEntry::plain(name, coalgebra(ThreeLieCoalgebra::zero(3))),
        "C_a4" => CatalogEntry::plain(name, coalgebra(ThreeLieCoalgebra::zero(4))),
        "C_b" => CatalogEntry::plain(
            name,
            coalgebra(coalgebra_from_int_cobrackets(3, &[(1, &[(1, (1, 2, 3))])])),
        ),
        "C_b1" => CatalogEntry::plain(
            name,
            coalgebra(coalgebra_from_int_cobrackets(4, &[(1, &[(1, (2, 3, 4))])])),
        ),
        "C_b2" => CatalogEntry::plain(
            name,
            coalgebra(coalgebra_from_int_cobrackets(4, &[(1, &[(1, (1, 2, 3))])])),
        ),
        "C_c1" => CatalogEntry::plain(
            name,
            coalgebra(coalgebra_from_int_cobrackets(
                4,
                &[(1, &[(1, (2, 3, 4))]), (2, &[(1, (1, 3, 4))])],
            )),
        ),
        "C_c3" => CatalogEntry::plain(
            name,
            coalgebra(coalgebra_from_int_cobrackets(
                4,
                &[(1, &[(1, (1, 3, 4))]), (2, &[(1, (2, 3, 4))])],
            )),
        ),
        "C_d" => CatalogEntry::plain(
            name,
            coalgebra(coalgebra_from_int_cobrackets(
                4,
                &[
                    (1, &[(1, (2, 3, 4))]),
                    (2, &[(1, (1, 3, 4))]),
                    (3, &[(1, (1, 2, 4))]),
                ],
            )),
        ),
        "C_e" => CatalogEntry::plain(
            name,
            coalgebra(coalgebra_from_int_cobrackets(
                4,
                &[
                    (1, &[(1, (2, 3, 4))]),
                    (2, &[(1, (1, 3, 4))]),
                    (3, &[(1, (1, 2, 4))]),
                    (4, &[(1, (1, 2, 3))]),
                ],
            )),
        ),
        "ex3.7.delta1" => CatalogEntry::plain(name, coalgebra(ex3_7_delta(1))),
        "ex3.7.delta2" => CatalogEntry::plain(name, coalgebra(ex3_7_delta(2))),
        "ex3.7.delta3" => CatalogEntry::plain(name, coalgebra(ex3_7_delta(3))),
        "thm43.delta1" => CatalogEntry::plain(name, coalgebra(thm43_delta(1))),
        "thm43.delta2" => CatalogEntry::plain(name, coalgebra(thm43_delta(2))),
        "thm43.delta3" => CatalogEntry::plain(name, coalgebra(thm43_delta(3))),
        "thm43.delta4" => CatalogEntry::plain(name, coalgebra(thm43_delta(4))),
        "thm43.delta5" => CatalogEntry::plain(name, coalgebra(thm43_delta(5))),
        "thm43.delta6" => CatalogEntry::plain(name, coalgebra(thm43_delta(6))),
        "ex3.2" => CatalogEntry::plain(name, CatalogObject::Bialgebra(ex3_2())),
        "ex3.4" => CatalogEntry::plain(
            name,
            CatalogObject::Bialgebra(dual_bialgebra_unchecked(&ex3_2())),
        )
        .with_note(
            "the second dual bracket lands on the triple (e1,e2,e4); a common \
             misprint places it on (e1,e3,e4)",
        ),
        "ex3.7.B1" => CatalogEntry::plain(
            name,
            CatalogObject::Bialgebra(
                ThreeLieBialgebra::new(l_c1(), ex3_7_delta(1)).expect("dims agree"),
            ),
        ),
        "ex3.7.B2" => CatalogEntry::plain(
            name,
            CatalogObject::Bialgebra(
                ThreeLieBialgebra::new(l_c1(), ex3_7_delta(2)).expect("dims agree"),
            ),
        ),
        "ex3.7.B3" => CatalogEntry::plain(
            name,
            CatalogObject::Bialgebra(
                ThreeLieBialgebra::new(l_c1(), ex3_7_delta(3)).expect("dims agree"),
            ),
        ),
        "B_thm43_0_0" => {
            CatalogEntry::plain(name, CatalogObject::Bialgebra(thm43_bialgebra(false, 0)))
        }
        "B_thm43_0_delta1" => {
            CatalogEntry::plain(name, CatalogObject::Bialgebra(thm43_bialgebra(false, 1)))
        }
        "B_thm43_mu_b_0" => {
            CatalogEntry::plain(name, CatalogObject::Bialgebra(thm43_bialgebra(true, 0)))
        }
        "B_thm43_mu_b_delta1" => {
            CatalogEntry::plain(name, CatalogObject::Bialgebra(thm43_bialgebra(true, 1)))
        }
        "B_thm43_mu_b_delta2" => {
            CatalogEntry::plain(name, CatalogObject::Bialgebra(thm43_bialgebra(true, 2)))
        }
        "B_thm43_mu_b_delta3" => {
            CatalogEntry::plain(name, CatalogObject::Bialgebra(thm43_bialgebra(true, 3)))
        }
        "B_thm43_mu_b_delta4" => {
            CatalogEntry::plain(name, CatalogObject::Bialgebra(thm43_bialgebra(true, 4)))
        }
        "B_thm43_mu_b_delta5" => {
            CatalogEntry::plain(name, CatalogObject::Bialgebra(thm43_bialgebra(true, 5)))
        }
        "B_thm43_mu_b_delta6" => {
            CatalogEntry::plain(name, CatalogObject::Bialgebra(thm43_bialgebra(true, 6)))
        }
        "thm43.f1" => CatalogEntry::plain(name, CatalogObject::Iso(thm43_f(1))),
        "thm43.f2" => CatalogEntry::plain(name, CatalogObject::Iso(thm43_f(2))),
        "ex3.7.f" => CatalogEntry::plain(name, CatalogObject::Iso(ex3_7_f())),
        _ => return Err(Error::UnknownCatalogName(name.to_string())),
    };
    Ok(entry)
}

/// Per-entry outcome of [`verify_catalog`].
#[derive(Clone, Debug)]
pub struct CatalogCheckResult {
    pub name: String,
    pub passed: bool,
    pub failures: Vec<String>,
    pub note: Option<&'static str>,
}

#[derive(Clone, Debug)]
pub struct CatalogReport {
    pub results: Vec<CatalogCheckResult>,
}

impl CatalogReport {
    pub fn is_pass(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }
}

const ALPHA_SAMPLES: [(i64, i64); 3] = [(1, 1), (2, 1), (-1, 2)];

/// The parameter values at which parametric families are exercised.
pub fn alpha_samples() -> Vec<ExactScalar> {
    ALPHA_SAMPLES
        .iter()
        .map(|(p, q)| ExactScalar::ratio(*p, *q))
        .collect()
}

/// Runs the axiom checks on every catalog entry (sampling the parametric
/// families), verifies the stored equivalence maps, and checks the stored
/// dual pairs. Failures carry the failing check names.
pub fn verify_catalog() -> CatalogReport {
    let mut results: Vec<CatalogCheckResult> = Vec::new();
    fn record(
        results: &mut Vec<CatalogCheckResult>,
        name: String,
        failures: Vec<String>,
        note: Option<&'static str>,
    ) {
        results.push(CatalogCheckResult {
            name,
            passed: failures.is_empty(),
            failures,
            note,
        });
    }

    for name in names() {
        let instances: Vec<(String, CatalogEntry)> = if PARAMETRIC.contains(name) {
            alpha_samples()
                .iter()
                .map(|a| {
                    (
                        format!("{name}(alpha={a})"),
                        get(name, Some(a)).expect("parametric lookup"),
                    )
                })
                .collect()
        } else {
            vec![((*name).to_string(), get(name, None).expect("known name"))]
        };
        for (label, entry) in instances {
            let mut failures = Vec::new();
            if !entry.nonexample {
                match &entry.object {
                    CatalogObject::Algebra(a) => {
                        if !a.check_fundamental_identity().is_pass() {
                            failures.push("fundamental-identity".to_string());
                        }
                    }
                    CatalogObject::Coalgebra(c) => {
                        if !c.check_co_jacobi().is_pass() {
                            failures.push("co-jacobi".to_string());
                        }
                    }
                    CatalogObject::Bialgebra(b) => {
                        let report = b.verify();
                        failures
                            .extend(report.failing_checks().iter().map(|s| s.to_string()));
                    }
                    CatalogObject::Iso(_) => {}
                }
            }
            record(&mut results, label, failures, entry.note);
        }
    }

    // stored equivalence maps verify between their endpoints
    let iso_contracts: [(&str, &str, &str); 3] = [
        ("ex3.7.f", "ex3.7.B1", "ex3.7.B3"),
        ("thm43.f1", "B_thm43_mu_b_delta2", "B_thm43_mu_b_delta5"),
        ("thm43.f2", "B_thm43_mu_b_delta2", "B_thm43_mu_b_delta4"),
    ];
    for (map_name, from, to) in iso_contracts {
        let mut failures = Vec::new();
        let (
            CatalogObject::Iso(f),
            CatalogObject::Bialgebra(b1),
            CatalogObject::Bialgebra(b2),
        ) = (
            get(map_name, None).expect("known").object,
            get(from, None).expect("known").object,
            get(to, None).expect("known").object,
        )
        else {
            unreachable!("catalog kinds are fixed")
        };
        if !matches!(verify_equivalence(&f, &b1, &b2), Ok(true)) {
            failures.push(format!("equivalence {from} -> {to}"));
        }
        record(&mut results, format!("{map_name} [{from} -> {to}]"), failures, None);
    }

    // stored dual pairs match transposition
    let dual_pairs: [(&str, &str); 8] = [
        ("L_a4", "C_a4"),
        ("L_b", "C_b"),
        ("L_b1", "C_b1"),
        ("L_b2", "C_b2"),
        ("L_c1", "C_c1"),
        ("L_c3", "C_c3"),
        ("L_d", "C_d"),
        ("L_e", "C_e"),
    ];
    for (algebra_name, coalgebra_name) in dual_pairs {
        let mut failures = Vec::new();
        let (CatalogObject::Algebra(a), CatalogObject::Coalgebra(c)) = (
            get(algebra_name, None).expect("known").object,
            get(coalgebra_name, None).expect("known").object,
        ) else {
            unreachable!("catalog kinds are fixed")
        };
        if dual_of_algebra(&a) != c {
            failures.push(format!("dual({algebra_name}) != {coalgebra_name}"));
        }
        record(
            &mut results,
            format!("dual pair {algebra_name} <-> {coalgebra_name}"),
            failures,
            None,
        );
    }
    for alpha in alpha_samples() {
        let mut failures = Vec::new();
        let (CatalogObject::Algebra(a), CatalogObject::Coalgebra(c)) = (
            get("L_c2", Some(&alpha)).expect("known").object,
            get("C_c2", Some(&alpha)).expect("known").object,
        ) else {
            unreachable!("catalog kinds are fixed")
        };
        if dual_of_algebra(&a) != c {
            failures.push("dual(L_c2) != C_c2".to_string());
        }
        record(
            &mut results,
            format!("dual pair L_c2 <-> C_c2 (alpha={alpha})"),
            failures,
            None,
        );
    }

    // the stored dual bialgebra really is the dual of its primal
    {
        let mut failures = Vec::new();
        let (CatalogObject::Bialgebra(b), CatalogObject::Bialgebra(expected_dual)) = (
            get("ex3.2", None).expect("known").object,
            get("ex3.4", None).expect("known").object,
        ) else {
            unreachable!("catalog kinds are fixed")
        };
        match dual_bialgebra(&b) {
            Ok(dual) if dual == expected_dual => {}
            _ => failures.push("dual(ex3.2) != ex3.4".to_string()),
        }
        record(&mut results, "dual pair ex3.2 <-> ex3.4".to_string(), failures, None);
    }

    CatalogReport { results }
}

/// Labels of the six equivalence classes of 3-dimensional bialgebras.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClassLabel {
    ZeroZero,
    ZeroDelta1,
    MuBZero,
    MuBDelta1,
    MuBDelta2,
    MuBDelta3,
}

impl ClassLabel {
    pub const ALL: [ClassLabel; 6] = [
        ClassLabel::ZeroZero,
        ClassLabel::ZeroDelta1,
        ClassLabel::MuBZero,
        ClassLabel::MuBDelta1,
        ClassLabel::MuBDelta2,
        ClassLabel::MuBDelta3,
    ];

    pub fn representative_name(&self) -> &'static str {
        match self {
            ClassLabel::ZeroZero => "B_thm43_0_0",
            ClassLabel::ZeroDelta1 => "B_thm43_0_delta1",
            ClassLabel::MuBZero => "B_thm43_mu_b_0",
            ClassLabel::MuBDelta1 => "B_thm43_mu_b_delta1",
            ClassLabel::MuBDelta2 => "B_thm43_mu_b_delta2",
            ClassLabel::MuBDelta3 => "B_thm43_mu_b_delta3",
        }
    }

    pub fn representative(&self) -> ThreeLieBialgebra {
        let CatalogObject::Bialgebra(b) = get(self.representative_name(), None)
            .expect("known name")
            .object
        else {
            unreachable!("representatives are bialgebras")
        };
        b
    }
}

impl std::fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ClassLabel::ZeroZero => "(L,0,0)",
            ClassLabel::ZeroDelta1 => "(L,0,Delta1)",
            ClassLabel::MuBZero => "(L,mu_b,0)",
            ClassLabel::MuBDelta1 => "(L,mu_b,Delta1)",
            ClassLabel::MuBDelta2 => "(L,mu_b,Delta2)",
            ClassLabel::MuBDelta3 => "(L,mu_b,Delta3)",
        };
        write!(f, "{s}")
    }
}

/// How one enumerated survivor was classified.
#[derive(Clone, Debug)]
pub enum Classification {
    /// Exactly one class matched, with the witness map.
    Classified(ClassLabel, LinearIso),
    /// No class matched within the search family.
    Unclassified,
    /// More than one class matched; impossible while the representatives
    /// are pairwise inequivalent, kept so the exactly-one contract stays
    /// checkable.
    Ambiguous(Vec<ClassLabel>),
}

/// One enumerated cobracket that survived the axiom filters.
#[derive(Clone, Debug)]
pub struct Survivor {
    pub coefficients: [ExactScalar; 3],
    pub classification: Classification,
}

/// Result of the dimension-3 enumeration for one bracket.
#[derive(Clone, Debug)]
pub struct EnumerationReport {
    pub survivors: Vec<Survivor>,
    pub rejected: usize,
}

impl EnumerationReport {
    /// Class labels with their member counts, zero-count classes omitted.
    pub fn class_counts(&self) -> Vec<(ClassLabel, usize)> {
        ClassLabel::ALL
            .iter()
            .map(|label| {
                let count = self
                    .survivors
                    .iter()
                    .filter(|s| {
                        matches!(&s.classification,
                                 Classification::Classified(l, _) if l == label)
                    })
                    .count();
                (*label, count)
            })
            .filter(|(_, count)| *count > 0)
            .collect()
    }

    pub fn unclassified_count(&self) -> usize {
        self.survivors
            .iter()
            .filter(|s| matches!(s.classification, Classification::Unclassified))
            .count()
    }

    pub fn ambiguous_count(&self) -> usize {
        self.survivors
            .iter()
            .filter(|s| matches!(s.classification, Classification::Ambiguous(_)))
            .count()
    }

    /// Coalgebra isomorphisms exercised by the classification: for each
    /// classified survivor, its cobracket, the representative's cobracket,
    /// and the witness map between them.
    pub fn coalgebra_witnesses(
        &self,
    ) -> Vec<(ThreeLieCoalgebra, ThreeLieCoalgebra, LinearIso)> {
        self.survivors
            .iter()
            .filter_map(|s| match &s.classification {
                Classification::Classified(label, iso) => Some((
                    dim3_cobracket(&s.coefficients),
                    label.representative().coalgebra().clone(),
                    iso.clone(),
                )),
                _ => None,
            })
            .collect()
    }
}

/// Enumerates all dimension-3 cobrackets with coefficients drawn from the
/// grid over the given bracket, filters by the co-Jacobi and compatibility
/// checks, and buckets each survivor against the six classification
/// representatives by witness search (signed permutations first, then the
/// small grid). Every survivor must land in exactly one bucket; anything
/// else is reported, never silently dropped.
pub fn enumerate_dim3(
    mu: &ThreeLieAlgebra,
    grid: &[ExactScalar],
) -> Result<EnumerationReport, Error> {
    if mu.dim() != 3 {
        return Err(Error::UnsupportedDim(mu.dim()));
    }
    if !grid.iter().any(ExactScalar::is_zero) {
        return Err(Error::GridWithoutZero);
    }
    let mut values: Vec<ExactScalar> = grid.to_vec();
    values.sort();
    values.dedup();

    let representatives: Vec<(ClassLabel, ThreeLieBialgebra)> = ClassLabel::ALL
        .iter()
        .map(|label| (*label, label.representative()))
        .collect();

    let mut survivors = Vec::new();
    let mut rejected = 0usize;
    for a1 in &values {
        for a2 in &values {
            for a3 in &values {
                let coefficients = [a1.clone(), a2.clone(), a3.clone()];
                let coalgebra = dim3_cobracket(&coefficients);
                if !coalgebra.check_co_jacobi().is_pass() {
                    rejected += 1;
                    continue;
                }
                let candidate =
                    ThreeLieBialgebra::new(mu.clone(), coalgebra).expect("dims agree");
                if !check_compatibility(&candidate).is_pass() {
                    rejected += 1;
                    continue;
                }
                let fp = fingerprint(&candidate);
                let mut matches: Vec<(ClassLabel, LinearIso)> = Vec::new();
                for (label, representative) in &representatives {
                    if fingerprint(representative) != fp {
                        continue;
                    }
                    let witness = match search_equivalence(
                        &candidate,
                        representative,
                        SearchFamily::SignedPermutations,
                    )? {
                        Some(iso) => Some(iso),
                        None => search_equivalence(
                            &candidate,
                            representative,
                            SearchFamily::GridSmall,
                        )?,
                    };
                    if let Some(iso) = witness {
                        matches.push((*label, iso));
                    }
                }
                let classification = match matches.len() {
                    0 => Classification::Unclassified,
                    1 => {
                        let (label, iso) = matches.pop().expect("len checked");
                        Classification::Classified(label, iso)
                    }
                    _ => Classification::Ambiguous(
                        matches.into_iter().map(|(l, _)| l).collect(),
                    ),
                };
                survivors.push(Survivor {
                    coefficients,
                    classification,
                });
            }
        }
    }
    Ok(EnumerationReport {
        survivors,
        rejected,
    })
}

/// Convenience wrapper running the enumeration for both brackets of the
/// dimension-3 classification: the abelian one and the standard nonabelian
/// one.
pub fn enumerate_dim3_bialgebras(
    grid: &[ExactScalar],
) -> Result<Vec<(&'static str, EnumerationReport)>, Error> {
    Ok(vec![
        ("abelian", enumerate_dim3(&ThreeLieAlgebra::abelian(3), grid)?),
        ("L_b", enumerate_dim3(&l_b(), grid)?),
    ])
}

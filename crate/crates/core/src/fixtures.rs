//! Built-in fixtures: the thirteen rational-quartic families with their displayed syzygy
//! columns, a handful of plane curves, and the ideal pairs with known torsion behavior.

use crate::blowup::PairInput;
use crate::error::Result;
use crate::parse::{parse_polynomial, parse_polynomial_list, parse_ring_header};
use crate::poly::{Polynomial, Rational};
use crate::ring::{RingContext, PARAM};
use crate::syzygy::jacobian_ideal;
use crate::Ideal;

/// A syzygy column of the gradient of a family member, rows `x, y, z`, valid after
/// substituting `at` into the family (parameters not listed stay symbolic).
#[derive(Clone, Copy, Debug)]
pub struct ColumnFixture {
    pub at: &'static [(&'static str, &'static str)],
    pub entries: [&'static str; 3],
}

#[derive(Clone, Copy, Debug)]
pub struct FamilyFixture {
    pub key: &'static str,
    pub name: &'static str,
    pub singularities: &'static str,
    pub params: &'static [&'static str],
    pub polynomial: &'static str,
    /// Polynomials in the parameters that must not vanish on a general member.
    pub constraints: &'static [&'static str],
    pub columns: &'static [ColumnFixture],
    pub provenance: &'static str,
}

const ORIGIN4: &[(&str, &str)] = &[("u4", "0"), ("u5", "0"), ("u6", "0")];

pub const FAMILIES: &[FamilyFixture] = &[
    FamilyFixture {
        key: "a",
        name: "three-nodes-general",
        singularities: "three nodes",
        params: &["u4", "u5", "u6"],
        polynomial: "y^2*z^2 + x^2*z^2 + x^2*y^2 + 2*x*y*z*(u4*x + u5*y + u6*z)",
        constraints: &["u4 - 1", "u4 + 1", "u5 - 1", "u5 + 1", "u6 - 1", "u6 + 1", "2*u4*u5*u6 - u4^2 - u5^2 - u6^2 + 1"],
        columns: &[
            ColumnFixture { at: ORIGIN4, entries: ["x*y^2 - x*z^2", "-y^3 - y*z^2", "y^2*z + z^3"] },
            ColumnFixture { at: ORIGIN4, entries: ["-x^3 - x*z^2", "x^2*y - y*z^2", "x^2*z + z^3"] },
        ],
        provenance: "rational quartics classification, case (a)",
    },
    FamilyFixture {
        key: "b",
        name: "two-nodes-cusp",
        singularities: "two nodes and a cusp",
        params: &["u4", "u5"],
        polynomial: "y^2*z^2 + x^2*z^2 + x^2*y^2 + 2*x*y*z^2 + 2*x*y*z*(u4*x + u5*y)",
        constraints: &["u4 - 1", "u4 + 1", "u5 - 1", "u5 + 1", "u4 - u5"],
        columns: &[ColumnFixture {
            at: &[],
            entries: [
                "x^2*(u4^2 - 1) + x*y*(u4*u5 - 1) + 2*x*z*(u4 - u5) + y*z*(u4 - u5)",
                "y^2*(u5^2 - 1) + x*y*(u4*u5 - 1) + x*z*(u5 - u4) + 2*y*z*(u5 - u4)",
                "3*z^2*(u4 - u5) + x*y*(u4 - u5) + x*z*(2*u4^2 - u5*u4 - 1) + y*z*(-2*u5^2 + u5*u4 + 1)",
            ],
        }],
        provenance: "rational quartics classification, case (b)",
    },
    FamilyFixture {
        key: "c",
        name: "node-two-cusps",
        singularities: "a node and two cusps",
        params: &["u4"],
        polynomial: "y^2*z^2 + x^2*z^2 + x^2*y^2 + 2*x*y^2*z + 2*x*y*z^2 + 2*u4*x^2*y*z",
        constraints: &["u4 - 1", "u4 + 1"],
        columns: &[
            ColumnFixture {
                at: &[],
                entries: ["-x*y + x*z", "3*y^2 + 2*x*y*u4 + x*z + 3*y*z", "-3*z^2 - 2*x*z*u4 - 2*x*y - 3*y*z"],
            },
            ColumnFixture {
                at: &[],
                entries: [
                    "x^2*(u4 + 1) + 3/2*x*y + 3/2*x*z + y*z",
                    "3/2*y^2 - x*y*(u4 + 1) + 1/2*y*z",
                    "3/2*z^2 + 2/2*y*z + x*z*(u4 + 1)",
                ],
            },
        ],
        provenance: "rational quartics classification, case (c)",
    },
    FamilyFixture {
        key: "d",
        name: "three-cusps",
        singularities: "three cusps",
        params: &[],
        polynomial: "y^2*z^2 + x^2*z^2 + x^2*y^2 - 2*x*y*z*(x + y + z)",
        constraints: &[],
        columns: &[
            ColumnFixture {
                at: &[],
                entries: ["x^2 + x*y + 2/3*x*z - 2/3*y*z", "-x*y - y^2 + 2/3*x*z - 2/3*y*z", "-1/3*x*z + 1/3*y*z"],
            },
            ColumnFixture { at: &[], entries: ["x*y + x*z - 2/3*y*z", "-y^2 + 1/3*y*z", "1/3*y*z - z^2"] },
        ],
        provenance: "rational quartics classification, case (d)",
    },
    FamilyFixture {
        key: "e",
        name: "tacnode-cusp",
        singularities: "a tacnode and a cusp",
        params: &["u5"],
        polynomial: "x^2*z^2 + y^4 + 2*y^3*z + 2*u5*x*y^2*z",
        constraints: &["u5 - 1", "u5 + 1"],
        columns: &[
            ColumnFixture { at: &[("u5", "0")], entries: ["2*x^2 - 3*y^2", "x*z", "-2*x*z"] },
            ColumnFixture { at: &[("u5", "0")], entries: ["2*x*y + 3*x*z", "y*z", "-2*y*z - 3*z^2"] },
        ],
        provenance: "rational quartics classification, case (e)",
    },
    FamilyFixture {
        key: "f",
        name: "tacnode-node",
        singularities: "a tacnode and a node",
        params: &["u4", "u5"],
        polynomial: "z^2*(x^2 + y^2) + y^4 + 2*y^2*z*(u4*y + 2*u5*x)",
        constraints: &["u5 - 1", "u5 + 1", "u4^2 + u5^2 - 1"],
        columns: &[
            ColumnFixture { at: &[("u4", "0"), ("u5", "0")], entries: ["x^2 + y^2", "0", "-x*z"] },
            ColumnFixture {
                at: &[("u4", "0"), ("u5", "0")],
                entries: ["2*x*y^2 + x*z^2", "y*z^2", "-2*y^2*z - z^3"],
            },
        ],
        provenance: "rational quartics classification, case (f)",
    },
    FamilyFixture {
        key: "g",
        name: "ramphoid-cusp-node",
        singularities: "a ramphoid cusp and a node",
        params: &["u2"],
        polynomial: "x^2*z^2 + y^4 + 2*z*y^3 + 2*x*y^2*z + u2*z^2*y^2",
        constraints: &["u2"],
        columns: &[ColumnFixture {
            at: &[("u2", "1")],
            entries: ["5*x^2 - y^2 + x*z - y*z", "y^2 + x*y + x*z + y*z", "-z^2 - 2*y^2 - x*z - 2*y*z"],
        }],
        provenance: "rational quartics classification, case (g)",
    },
    FamilyFixture {
        key: "h",
        name: "ramphoid-cusp-cusp",
        singularities: "a ramphoid cusp and a cusp",
        params: &[],
        polynomial: "x^2*z^2 + y^4 + 2*z*y^3 + 2*x*y^2*z",
        constraints: &[],
        columns: &[
            ColumnFixture { at: &[], entries: ["2*y^2 - 3*x*z", "-y*z", "3*z^2"] },
            ColumnFixture {
                at: &[],
                entries: [
                    "x^2 - 27/50*x*z",
                    "1/5*x*y + 1/5*y^2 + 3/25*x*z - 9/50*y*z",
                    "-2/5*y^2 - x*z - 6/25*y*z + 27/50*z^2",
                ],
            },
        ],
        provenance: "rational quartics classification, case (h)",
    },
    FamilyFixture {
        key: "i",
        name: "oscnode",
        singularities: "an oscnode",
        params: &["u3"],
        polynomial: "(y^2 - x*z)^2 + y^2*z^2 + u3*z^4",
        constraints: &["u3"],
        columns: &[],
        provenance: "rational quartics classification, case (i)",
    },
    FamilyFixture {
        key: "j",
        name: "a6",
        singularities: "an A6 singularity",
        params: &[],
        polynomial: "(y^2 - x*z)^2 + 2*y*z^3",
        constraints: &[],
        columns: &[
            ColumnFixture { at: &[], entries: ["6*y^2 + x*z", "3*y*z", "-z^2"] },
            ColumnFixture { at: &[], entries: ["7*x^2 + 18*y*z", "3*x*y", "6*y^2 - 7*x*z"] },
        ],
        provenance: "rational quartics classification, case (j)",
    },
    FamilyFixture {
        key: "k",
        name: "ordinary-triple-point",
        singularities: "an ordinary triple point",
        params: &["u1", "u2"],
        polynomial: "x*(y^2 - x^2)*z + y^4 + x^2*y*(u1*y + u2*x)",
        constraints: &[],
        columns: &[ColumnFixture {
            at: &[("u1", "0"), ("u2", "0")],
            entries: ["x^2 - 2/3*y^2 + 1/6*x*z", "1/6*y*z", "-(3*x + 1/2*z)*z"],
        }],
        provenance: "rational quartics classification, case (k)",
    },
    FamilyFixture {
        key: "l",
        name: "triple-point-double-tangent",
        singularities: "a triple point with a double tangent",
        params: &["u1"],
        polynomial: "x*y^2*z + x^4 + y^4 + u1*x^3*y",
        constraints: &[],
        columns: &[ColumnFixture { at: &[("u1", "0")], entries: ["0", "x*y", "-4*y^2 - 2*x*z"] }],
        provenance: "rational quartics classification, case (l)",
    },
    FamilyFixture {
        key: "m",
        name: "higher-cusp",
        singularities: "a higher cusp",
        params: &["u1"],
        polynomial: "y^3*z + x^4 + u1*x^2*y^2",
        constraints: &[],
        columns: &[ColumnFixture { at: &[("u1", "0")], entries: ["0", "y", "-3*z"] }],
        provenance: "rational quartics classification, case (m)",
    },
];

pub fn family(name_or_key: &str) -> Option<&'static FamilyFixture> {
    FAMILIES.iter().find(|f| f.key == name_or_key || f.name == name_or_key)
}

impl FamilyFixture {
    pub fn header(&self) -> String {
        if self.params.is_empty() {
            "ring: x,y,z".to_string()
        } else {
            format!("ring: x,y,z | params: {}", self.params.join(","))
        }
    }

    pub fn ring(&self) -> RingContext {
        parse_ring_header(&self.header()).expect("fixture header")
    }

    pub fn polynomial(&self) -> Polynomial {
        parse_polynomial(&self.ring(), self.polynomial).expect("fixture polynomial")
    }

    pub fn constraint_polynomials(&self) -> Vec<Polynomial> {
        let r = self.ring();
        self.constraints.iter().map(|c| parse_polynomial(&r, c).expect("fixture constraint")).collect()
    }

    /// `gradient(F|at) · column`, which vanishes exactly when the column is a syzygy.
    pub fn column_residual(&self, column: &ColumnFixture) -> Result<Polynomial> {
        let r = self.ring();
        let mut vars = Vec::new();
        let mut values = Vec::new();
        for (name, value) in column.at {
            vars.push(r.var_index(name).ok_or_else(|| crate::Error::UnknownVariable(name.to_string()))?);
            values.push(parse_rational(value));
        }
        let f = self.polynomial().substitute_values(&vars, &values);
        let mut acc = Polynomial::zero(&r);
        for (i, e) in column.entries.iter().enumerate() {
            let c = parse_polynomial(&r, e)?.substitute_values(&vars, &values);
            acc = &acc + &(&f.derivative_at(i) * &c);
        }
        Ok(acc)
    }

    /// Parameter values for the member named by a column's `at` list, if it fixes every parameter.
    pub fn column_point(&self, column: &ColumnFixture) -> Option<Vec<Rational>> {
        let r = self.ring();
        let params = r.block_indices(PARAM);
        params
            .iter()
            .map(|&i| column.at.iter().find(|(n, _)| *n == r.name(i)).map(|(_, v)| parse_rational(v)))
            .collect()
    }
}

fn parse_rational(s: &str) -> Rational {
    let r = RingContext::geometric(&["x"]).expect("ring");
    parse_polynomial(&r, s).expect("rational literal").constant_term()
}

#[derive(Clone, Copy, Debug)]
pub struct CurveFixture {
    pub name: &'static str,
    pub polynomial: &'static str,
    pub provenance: &'static str,
}

pub const CURVES: &[CurveFixture] = &[
    CurveFixture {
        name: "three-nodes",
        polynomial: "x^2*y^2 + x^2*z^2 + y^2*z^2",
        provenance: "rational quartics classification, case (a) at the origin",
    },
    CurveFixture {
        name: "bad-quintic",
        polynomial: "y^4*z + x^5 + x^3*y^2",
        provenance: "rational quintic whose gradient ideal is not of linear type",
    },
    CurveFixture {
        name: "second-quintic",
        polynomial: "z*y^2*(x^2 + y^2) + x^5 + y^5 + x^3*y^2",
        provenance: "rational quintic whose Aluffi algebra has embedded primes",
    },
    CurveFixture { name: "fermat-quartic", polynomial: "x^4 + y^4 + z^4", provenance: "smooth curve, regular gradient" },
];

pub fn curve(name: &str) -> Option<&'static CurveFixture> {
    CURVES.iter().find(|c| c.name == name)
}

impl CurveFixture {
    pub fn polynomial(&self) -> Polynomial {
        let r = RingContext::geometric(&["x", "y", "z"]).expect("ring");
        parse_polynomial(&r, self.polynomial).expect("fixture polynomial")
    }
}

/// The one-parameter quintic family whose general member is not of linear type.
pub const QUINTIC_FAMILY: FamilyFixture = FamilyFixture {
    key: "q",
    name: "quintic-family",
    singularities: "a family of rational quintics",
    params: &["u"],
    polynomial: "y^4*z + x^5 + u*x^3*y^2",
    constraints: &[],
    columns: &[],
    provenance: "degeneration of the linear-type property in a quintic family",
};

#[derive(Clone, Copy, Debug)]
pub struct PairFixture {
    pub name: &'static str,
    pub vars: &'static [&'static str],
    pub i_gens: &'static str,
    pub j_gens: &'static str,
    /// Elements of `J ∩ I^2` outside `J I` (empty when the pair is torsion-free).
    pub witnesses: &'static [&'static str],
    pub provenance: &'static str,
}

pub const PAIRS: &[PairFixture] = &[
    PairFixture {
        name: "four-points",
        vars: &["x", "y", "z"],
        i_gens: "x^2 - x*z, y^2 - y*z, x*(2*y - z), y*(2*x - z), (2*x - z)*(2*y - z)",
        j_gens: "x^2 - x*z, y^2 - y*z",
        witnesses: &["x*z^2*(x - z)", "y*z^2*(y - z)"],
        provenance: "four points example: torsion generated in degree two",
    },
    PairFixture {
        name: "monomial-partials",
        vars: &["x1", "x2", "x3"],
        i_gens: "x2*x3, x1*x3, x1*x2, x1^2, x2^2, x3^2",
        j_gens: "x2*x3, x1*x3, x1*x2",
        witnesses: &[],
        provenance: "partials of x1*x2*x3 with the squared Hessian minors",
    },
    PairFixture {
        name: "coordinate-points",
        vars: &["x1", "x2", "x3"],
        i_gens: "x2*x3, x1*x3, x1*x2, x1^2, x2^2, x3^2",
        j_gens: "x2*x3, x1*x3, x1*x2",
        witnesses: &[],
        provenance: "coordinate points with pure powers of the variables",
    },
];

pub fn pair_fixture(name: &str) -> Option<&'static PairFixture> {
    PAIRS.iter().find(|p| p.name == name)
}

impl PairFixture {
    pub fn ring(&self) -> RingContext {
        RingContext::geometric(self.vars).expect("ring")
    }

    pub fn pair(&self) -> Result<PairInput> {
        let r = self.ring();
        PairInput::new(&r, parse_polynomial_list(&r, self.i_gens)?, parse_polynomial_list(&r, self.j_gens)?)
    }

    pub fn witness_polynomials(&self) -> Result<Vec<Polynomial>> {
        let r = self.ring();
        self.witnesses.iter().map(|w| parse_polynomial(&r, w)).collect()
    }

    /// `J + I_c(Θ)` computed from `J`, to compare with the stored `I`.
    pub fn derived_i(&self) -> Result<Ideal> {
        let r = self.ring();
        let j = Ideal::new(&r, parse_polynomial_list(&r, self.j_gens)?)?;
        jacobian_ideal(&j, &(0..r.arity()).collect::<Vec<_>>())
    }
}

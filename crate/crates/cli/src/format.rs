//! JSON and CSV encodings of the core types.
//!
//! Scalars are strings in canonical text form (`"p/q"`, `"p"`, `"a+b*i"`).
//! Recurrence tables are arrays indexed by `n`, with `null` for entries the
//! recurrence never reads.

use std::fmt::Write as _;
use std::str::FromStr;

use orthodiff_core::opsfam::{GeneralTtr, MonicTtr, Table};
use orthodiff_core::{
    ClassifyResult, DiffOp, Field, GammaSeq, GaussianRational, Poly, Rational, RootReport, TtrSpec,
};
use serde::{Deserialize, Serialize};

use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub coeffs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffOpJson {
    pub pk: Vec<PolyJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaJson {
    pub gammas: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum TtrJson {
    Monic {
        p0: String,
        c: Vec<Option<String>>,
        lam: Vec<Option<String>>,
    },
    General {
        p0: String,
        a: Vec<Option<String>>,
        b: Vec<Option<String>>,
        c: Vec<Option<String>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ClassifyJson {
    ExpForm {
        gamma0: String,
        alpha: String,
        beta: String,
    },
    NotOps {
        index: usize,
        reason: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootReportJson {
    pub degree: usize,
    pub distinct_real_roots: usize,
    pub all_roots_real: bool,
    pub isolating_intervals: Vec<[String; 2]>,
}

pub fn parse_scalar<F: FromStr>(s: &str) -> Result<F, Error> {
    s.trim().parse().map_err(|_| Error::Scalar(s.to_owned()))
}

fn parse_all<F: FromStr>(items: &[String]) -> Result<Vec<F>, Error> {
    items.iter().map(|s| parse_scalar(s)).collect()
}

fn parse_table<F: FromStr>(items: &[Option<String>]) -> Result<Table<F>, Error> {
    items
        .iter()
        .map(|s| s.as_deref().map(parse_scalar).transpose())
        .collect()
}

fn table_strings<F: Field>(t: &Table<F>) -> Vec<Option<String>> {
    t.iter().map(|v| v.as_ref().map(F::to_string)).collect()
}

impl PolyJson {
    pub fn from_poly<F: Field>(p: &Poly<F>) -> Self {
        PolyJson {
            coeffs: p.coeffs().iter().map(F::to_string).collect(),
        }
    }

    pub fn to_poly<F: Field + FromStr>(&self) -> Result<Poly<F>, Error> {
        Ok(Poly::new(parse_all(&self.coeffs)?))
    }
}

impl DiffOpJson {
    pub fn from_diffop<F: Field>(op: &DiffOp<F>) -> Self {
        DiffOpJson {
            pk: op.pk().iter().map(PolyJson::from_poly).collect(),
        }
    }

    pub fn to_diffop<F: Field + FromStr>(&self) -> Result<DiffOp<F>, Error> {
        let pk = self
            .pk
            .iter()
            .map(PolyJson::to_poly)
            .collect::<Result<_, _>>()?;
        Ok(DiffOp::new(pk))
    }
}

impl GammaJson {
    pub fn from_gamma<F: Field>(g: &GammaSeq<F>) -> Self {
        GammaJson {
            gammas: g.gammas().iter().map(F::to_string).collect(),
        }
    }

    pub fn to_gamma<F: Field + FromStr>(&self) -> Result<GammaSeq<F>, Error> {
        Ok(GammaSeq::new(parse_all(&self.gammas)?))
    }
}

impl TtrJson {
    pub fn from_spec<F: Field>(spec: &TtrSpec<F>) -> Self {
        match spec {
            TtrSpec::Monic(m) => TtrJson::Monic {
                p0: m.p0.to_string(),
                c: table_strings(&m.c),
                lam: table_strings(&m.lam),
            },
            TtrSpec::General(g) => TtrJson::General {
                p0: g.p0.to_string(),
                a: table_strings(&g.a),
                b: table_strings(&g.b),
                c: table_strings(&g.c),
            },
        }
    }

    pub fn to_spec<F: Field + FromStr>(&self) -> Result<TtrSpec<F>, Error> {
        Ok(match self {
            TtrJson::Monic { p0, c, lam } => TtrSpec::Monic(MonicTtr {
                p0: parse_scalar(p0)?,
                c: parse_table(c)?,
                lam: parse_table(lam)?,
            }),
            TtrJson::General { p0, a, b, c } => TtrSpec::General(GeneralTtr {
                p0: parse_scalar(p0)?,
                a: parse_table(a)?,
                b: parse_table(b)?,
                c: parse_table(c)?,
            }),
        })
    }

    /// Every scalar in the spec, for deciding which field to compute in.
    pub fn scalars(&self) -> Vec<&str> {
        let (p0, tables): (&String, Vec<&Vec<Option<String>>>) = match self {
            TtrJson::Monic { p0, c, lam } => (p0, vec![c, lam]),
            TtrJson::General { p0, a, b, c } => (p0, vec![a, b, c]),
        };
        let entries = tables.into_iter().flatten().flatten().map(String::as_str);
        std::iter::once(p0.as_str()).chain(entries).collect()
    }
}

impl ClassifyJson {
    pub fn from_result<F: Field>(r: &ClassifyResult<F>) -> Self {
        match r {
            ClassifyResult::ExpForm(p) => ClassifyJson::ExpForm {
                gamma0: p.gamma0().to_string(),
                alpha: p.alpha().to_string(),
                beta: p.beta().to_string(),
            },
            ClassifyResult::NotOps { index, reason } => ClassifyJson::NotOps {
                index: *index,
                reason: reason.as_str().to_owned(),
            },
        }
    }
}

impl RootReportJson {
    pub fn from_report(r: &RootReport) -> Self {
        RootReportJson {
            degree: r.degree,
            distinct_real_roots: r.distinct_real_roots,
            all_roots_real: r.all_roots_real,
            isolating_intervals: r
                .isolating_intervals
                .iter()
                .map(|(lo, hi)| [lo.to_string(), hi.to_string()])
                .collect(),
        }
    }
}

/// Whether every scalar parses as a real rational. Strings that parse as
/// neither kind are reported by the subsequent typed parse.
pub fn all_real<'a>(items: impl IntoIterator<Item = &'a str>) -> bool {
    items.into_iter().all(|s| {
        s.trim().parse::<Rational>().is_ok() || s.trim().parse::<GaussianRational>().is_err()
    })
}

/// One row per polynomial: `n,x^0,x^1,…`, padded with zeros to the widest
/// degree.
pub fn coeff_table_csv<F: Field>(polys: &[Poly<F>]) -> String {
    let width = polys
        .iter()
        .filter_map(Poly::degree)
        .max()
        .map_or(1, |d| d + 1);
    let mut out = String::from("n");
    for k in 0..width {
        write!(out, ",x^{k}").unwrap();
    }
    out.push('\n');
    for (n, p) in polys.iter().enumerate() {
        write!(out, "{n}").unwrap();
        for k in 0..width {
            write!(out, ",{}", p.coeff(k)).unwrap();
        }
        out.push('\n');
    }
    out
}

/// `r,a_r` rows.
pub fn pairs_csv<F: Field>(header: &str, values: &[F]) -> String {
    let mut out = format!("r,{header}\n");
    for (r, v) in values.iter().enumerate() {
        writeln!(out, "{r},{v}").unwrap();
    }
    out
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn from_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T, Error> {
    serde_json::from_str(text).map_err(Error::Json)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn poly_json_shape() {
        let p = Poly::new(vec![q(1, 1), q(-2, 1), q(1, 2)]);
        let json = serde_json::to_string(&PolyJson::from_poly(&p)).unwrap();
        assert_eq!(json, r#"{"coeffs":["1","-2","1/2"]}"#);
        let back: PolyJson = from_json(&json).unwrap();
        assert_eq!(back.to_poly::<Rational>().unwrap(), p);
    }

    #[test]
    fn ttr_json_round_trip() {
        let spec = TtrSpec::Monic(MonicTtr::shifted_hermite(q(1, 1), q(0, 1), 3));
        let json = serde_json::to_string(&TtrJson::from_spec(&spec)).unwrap();
        assert_eq!(
            json,
            r#"{"kind":"monic","p0":"1","c":[null,"0","0","0"],"lam":[null,null,"1","2"]}"#
        );
        let back: TtrJson = from_json(&json).unwrap();
        assert_eq!(back.to_spec::<Rational>().unwrap(), spec);
    }

    #[test]
    fn classify_json_shapes() {
        let r: ClassifyResult<Rational> = ClassifyResult::NotOps {
            index: 3,
            reason: orthodiff_core::NotOpsReason::Recursion,
        };
        assert_eq!(
            serde_json::to_string(&ClassifyJson::from_result(&r)).unwrap(),
            r#"{"verdict":"not_ops","index":3,"reason":"recursion"}"#
        );
        let p = orthodiff_core::ExpOpParams::new(q(1, 1), q(1, 1), q(0, 1)).unwrap();
        assert_eq!(
            serde_json::to_string(&ClassifyJson::from_result(&ClassifyResult::ExpForm(p))).unwrap(),
            r#"{"verdict":"exp_form","gamma0":"1","alpha":"1","beta":"0"}"#
        );
    }

    #[test]
    fn bad_scalar_is_reported() {
        let j = PolyJson {
            coeffs: vec!["1/0".into()],
        };
        assert!(matches!(j.to_poly::<Rational>(), Err(Error::Scalar(_))));
    }

    #[test]
    fn realness_detection() {
        assert!(all_real(["1", "-2/3"]));
        assert!(!all_real(["1", "2*i"]));
        assert!(all_real(["garbage"]));
    }

    #[test]
    fn coefficient_table() {
        let polys = vec![Poly::new(vec![q(1, 1)]), Poly::new(vec![q(1, 1), q(-1, 1)])];
        assert_eq!(coeff_table_csv(&polys), "n,x^0,x^1\n0,1,0\n1,1,-1\n");
        assert_eq!(pairs_csv("a_r", &[q(1, 1), q(-2, 1)]), "r,a_r\n0,1\n1,-2\n");
    }
}

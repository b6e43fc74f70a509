//! Independent re-checking of saved verdicts.

use std::path::Path;

use anyhow::{anyhow, Context};
use num_traits::{Signed, Zero};
use serde::Deserialize;
use serde_json::{json, Value};
use trophyp::curves::{random_complex, trial_rng};
use trophyp::exactlin::ExactMatrix;
use trophyp::matroids::{face_matroid, Matroid, Subset};
use trophyp::rational::{serde_rational_vec, Rational};
use trophyp::signvar::varbar;
use trophyp::stability::{exchange_failure, real_rooted_on_line, LatticePointSet};

use crate::commands::{self, Ctx, FalsifyInput, MatroidWithWeight, RawMatroid, SampleInput};
use crate::input::{from_value, integer_matrix, matrix, read_json};
use crate::verdict::{Outcome, Report, Verdict};

fn field<'a>(v: &'a Value, key: &str) -> anyhow::Result<&'a Value> {
    v.get(key).filter(|x| !x.is_null()).ok_or_else(|| anyhow!("certificate lacks `{key}`"))
}

fn alternates(a: &[usize], b: &[usize], w: [usize; 4]) -> bool {
    w[0] < w[1]
        && w[1] < w[2]
        && w[2] < w[3]
        && a.contains(&w[0])
        && a.contains(&w[2])
        && b.contains(&w[1])
        && b.contains(&w[3])
}

#[derive(Deserialize)]
struct CrossingJson {
    blocks: (Vec<usize>, Vec<usize>),
    witness: [usize; 4],
}

fn subsets(v: &Value, n: usize) -> anyhow::Result<Vec<Subset>> {
    let lists: Vec<Vec<usize>> = from_value(v, "subset list")?;
    Ok(lists.iter().map(|l| Subset::from_one_indexed(l, n)).collect::<trophyp::Result<Vec<_>>>()?)
}

/// Checks the failure witness of `v` directly. `None` when the check has no
/// standalone witness.
fn witness(v: &Verdict) -> anyhow::Result<Option<bool>> {
    let c = &v.certificate;
    Ok(Some(match v.check.as_str() {
        "grassmannian" => {
            let m = matrix(&v.input)?;
            let opp = field(c, "opposite_signs")?;
            let idx = |k: &str| -> anyhow::Result<Vec<usize>> {
                let s: Vec<usize> = from_value(field(opp, k)?, "subset")?;
                Ok(s.iter().map(|x| x - 1).collect())
            };
            m.minor(&idx("positive")?).is_positive() && m.minor(&idx("negative")?).is_negative()
        }
        "matroid-validate" => {
            let r: RawMatroid = from_value(&v.input, "matroid")?;
            let ev = field(c, "exchange_violation")?;
            let first: Vec<usize> = from_value(field(ev, "first")?, "basis")?;
            let second: Vec<usize> = from_value(field(ev, "second")?, "basis")?;
            let e: usize = from_value(field(ev, "element")?, "element")?;
            let norm = |b: &[usize]| {
                let mut b = b.to_vec();
                b.sort_unstable();
                b
            };
            let bases: Vec<Vec<usize>> = r.bases.iter().map(|b| norm(b)).collect();
            bases.contains(&norm(&first))
                && bases.contains(&norm(&second))
                && first.contains(&e)
                && !second.contains(&e)
                && second.iter().filter(|f| !first.contains(f)).all(|&f| {
                    let swapped: Vec<usize> = first.iter().map(|&x| if x == e { f } else { x }).collect();
                    !bases.contains(&norm(&swapped))
                })
        }
        "positroid" => {
            let m: Matroid = from_value(&v.input, "matroid")?;
            let cert = field(c, "certificate")?;
            #[derive(Deserialize)]
            struct Cert {
                face_bases: Vec<Vec<usize>>,
                #[serde(with = "serde_rational_vec")]
                face_weight: Vec<Rational>,
                components: Vec<Vec<usize>>,
                crossing: CrossingJson,
            }
            let cert: Cert = from_value(cert, "positroid certificate")?;
            let face = face_matroid(&m, &cert.face_weight)?;
            let bases: Vec<Vec<usize>> = face.matroid.bases().iter().map(|b| b.one_indexed()).collect();
            let comps: Vec<Vec<usize>> = face.components().iter().map(|s| s.one_indexed()).collect();
            let (a, b) = &cert.crossing.blocks;
            bases == cert.face_bases
                && face.matroid.loops() == m.loops()
                && comps == cert.components
                && comps.contains(a)
                && comps.contains(b)
                && alternates(a, b, cert.crossing.witness)
        }
        "bergman-noncrossing" => {
            let cert = field(c, "certificate")?;
            let comps: Vec<Vec<usize>> = from_value(field(cert, "components")?, "components")?;
            let x: CrossingJson = from_value(field(cert, "crossing")?, "crossing")?;
            comps.contains(&x.blocks.0)
                && comps.contains(&x.blocks.1)
                && alternates(&x.blocks.0, &x.blocks.1, x.witness)
        }
        "bergman-member" => {
            let i: MatroidWithWeight = from_value(&v.input, "input")?;
            let circ = subsets(&json!([field(c, "unique_min_circuit")?]), i.matroid.n())?[0];
            let is_circuit = i.matroid.rank_of(circ) + 1 == circ.len()
                && circ.iter().all(|e| i.matroid.is_independent(circ.without(e)));
            let min = circ.iter().map(|e| &i.w[e]).min().cloned().unwrap_or_default();
            is_circuit && circ.iter().filter(|&e| i.w[e] == min).count() == 1
        }
        "poly-mset" => {
            let s: LatticePointSet = from_value(&v.input, "point set")?;
            let f = field(c, "exchange_failure")?;
            let x: Vec<i64> = from_value(field(f, "x")?, "point")?;
            let y: Vec<i64> = from_value(field(f, "y")?, "point")?;
            let i: usize = from_value(field(f, "i")?, "index")?;
            let i = i.checked_sub(1).ok_or_else(|| anyhow!("index is 1-based"))?;
            s.contains(&x)
                && s.contains(&y)
                && x[i] > y[i]
                && (0..s.n).filter(|&j| x[j] < y[j]).all(|j| {
                    let mut z = x.clone();
                    z[i] -= 1;
                    z[j] += 1;
                    !s.contains(&z)
                })
        }
        "poly-mfun" => {
            let cell: Vec<Vec<i64>> = from_value(field(c, "failing_cell")?, "cell")?;
            let n = cell.first().map_or(0, |p| p.len());
            exchange_failure(&LatticePointSet::new(n, cell)?).is_some()
        }
        "poly-falsify" => {
            let i: FalsifyInput = from_value(&v.input, "input")?;
            #[derive(Deserialize)]
            struct Line {
                #[serde(with = "serde_rational_vec")]
                v: Vec<Rational>,
                #[serde(with = "serde_rational_vec")]
                w: Vec<Rational>,
            }
            let line: Line = from_value(c, "counterexample")?;
            line.v.iter().all(|x| x.is_positive())
                && !real_rooted_on_line(&i.polynomial.to_constant()?, &line.v, &line.w)?
        }
        "curve-sample" => {
            let i: SampleInput = from_value(&v.input, "input")?;
            let t: u64 = from_value(field(c, "first_violation")?, "trial")?;
            let mut rng = trial_rng(v.seed, t);
            let u = random_complex(&mut rng);
            let w = random_complex(&mut rng);
            let im: Vec<Rational> = i.param.evaluate(&u, &w).into_iter().map(|z| z.im).collect();
            varbar(&im) < i.param.n.saturating_sub(2)
        }
        "toric-check" => {
            let a = integer_matrix(field(&v.input, "matrix")?)?;
            let reason = field(field(c, "verdict")?, "reason")?;
            let (r, _) = ExactMatrix::from_ints(&a.rows).rref();
            match reason.get("kind").and_then(Value::as_str) {
                Some("column") => {
                    let j: usize = from_value(field(reason, "column")?, "column")?;
                    let col: Vec<Rational> = (0..a.d()).map(|i| r.get(i, j - 1).clone()).collect();
                    let nz: Vec<&Rational> = col.iter().filter(|x| !x.is_zero()).collect();
                    nz.len() > 1 || nz.first().is_some_and(|x| x.abs() != Rational::from_integer(1.into()))
                }
                Some("crossing") => {
                    let x: CrossingJson = from_value(field(reason, "crossing")?, "crossing")?;
                    let supports: Vec<Vec<usize>> = (0..a.d())
                        .map(|i| (0..a.n).filter(|&j| !r.get(i, j).is_zero()).map(|j| j + 1).collect())
                        .collect();
                    supports.contains(&x.blocks.0)
                        && supports.contains(&x.blocks.1)
                        && alternates(&x.blocks.0, &x.blocks.1, x.witness)
                }
                _ => return Ok(None),
            }
        }
        _ => return Ok(None),
    }))
}

pub fn verify(strategy: trophyp::par::Strategy, path: &Path) -> anyhow::Result<Report> {
    let (v, _): (Verdict, Value) = read_json(path)?;
    let check = commands::lookup(&v.check).with_context(|| format!("unknown check `{}`", v.check))?;
    let ctx = Ctx { seed: v.seed, strategy };
    let again = check(&ctx, &v.input)?;
    let rerun_matches = again.result == v.result && again.certificate == v.certificate;
    let witness_holds = if v.result == Outcome::Fail { witness(&v)? } else { None };
    let confirmed = rerun_matches && witness_holds != Some(false);
    Report::verdict(Verdict::new(
        "verify",
        Outcome::of(confirmed),
        json!({ "check": v.check, "result": v.result }),
        json!({ "rerun_matches": rerun_matches, "witness_checked": witness_holds.is_some(), "witness_holds": witness_holds }),
        v.seed,
    ))
}

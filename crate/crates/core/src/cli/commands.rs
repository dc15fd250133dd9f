//! Command implementations: each turns a manifest into a report document.

use serde_json::{json, Value};

use crate::al::{
    al_decide_tensor, al_is_submultiplicative, al_submultiplicativity_witness, atom_product, band_space,
    decide_atomic_tensor, lift_band_product, only_zero_product, AlProduct, AlWeight, Band, LiftedProduct,
};
use crate::error::{Error, Result};
use crate::falgebra::am::{am_product, am_product_is_unique, classify_am_algebra};
use crate::falgebra::center::decide_central;
use crate::falgebra::nakano::nakano_witness;
use crate::falgebra::product::{
    is_submultiplicative, submultiplicativity_witness, Product, TensorProduct, WeightProduct, ZeroProduct,
};
use crate::falgebra::root::{nth_root, root_residuals, FloatElement};
use crate::falgebra::tensor::decide_tensor;
use crate::falgebra::verify::{verify_falgebra_axioms, AxiomReport};
use crate::falgebra::weight::{wx_membership, Weight};
use crate::hom::{
    ball_square_condition, composition_form, is_am_algebra_hom, is_lattice_hom, satisfies_row_rule, unit_name,
};
use crate::operator::Operator;
use crate::scalar;
use crate::space::{Element, ModelSpace};
use crate::spectrum::ConvergenceDatum;
use crate::sweep::{hom_sweep, tensor_sweep, HomCase, TensorCase};

use super::manifest::{
    encode_band, encode_element, encode_family, encode_list, encode_operator, encode_rational, encode_space,
    encode_tensor, encode_weight, Manifest, SweepSpec,
};

fn require<'a, T>(v: &'a Option<T>, name: &str) -> Result<&'a T> {
    v.as_ref().ok_or_else(|| Error::Schema(format!("manifest needs \"{name}\" for this command")))
}

fn datum(d: &ConvergenceDatum) -> Value {
    json!({"net": d.net.id.to_string(), "limit": d.limit.id.to_string()})
}

fn pair(x: &Element, y: &Element) -> Value {
    json!([encode_element(x), encode_element(y)])
}

pub fn classify(m: &Manifest) -> Result<Value> {
    let space = require(&m.space, "space")?;
    let c = classify_am_algebra(space)?;
    let norm_witness = c.norm_continuity.witness.as_ref().map(|w| {
        json!({"datum": datum(&w.datum), "netNorms": encode_rational(&w.along_net), "limitNorm": encode_rational(&w.at_limit)})
    });
    let weight_witness = c.unit_weight.witness.as_ref().map(|w| {
        json!({"datum": datum(&w.datum), "alongNet": encode_rational(&w.along_net), "atLimit": encode_rational(&w.at_limit)})
    });
    let nakano = match &m.sample {
        Some(sample) => {
            let w = nakano_witness(space, sample)?;
            json!({
                "sample": sample.iter().map(encode_family).collect::<Vec<_>>(),
                "supNorms": encode_rational(&w.sup_norms),
                "infBoundNorms": encode_rational(&w.inf_bound_norms),
                "leastBound": encode_element(&w.least_bound),
                "equal": w.equal,
            })
        }
        None => Value::Null,
    };
    Ok(json!({
        "space": encode_space(space),
        "isAMAlgebra": c.is_am_algebra,
        "normContinuous": c.norm_continuity.continuous,
        "normContinuityWitness": norm_witness,
        "unitWeightInWX": c.unit_weight.member,
        "unitWeightWitness": weight_witness,
        "amWeight": c.am_weight.as_ref().map(encode_weight),
        "nakanoWitness": nakano,
    }))
}

pub fn wx_check(m: &Manifest) -> Result<Value> {
    let space = require(&m.space, "space")?;
    let w = require(&m.weight, "weight")?;
    let r = wx_membership(space, w)?;
    Ok(json!({
        "space": encode_space(space),
        "weight": encode_weight(w),
        "member": r.member,
        "witness": r.witness.as_ref().map(|w| json!({
            "datum": datum(&w.datum),
            "alongNet": encode_rational(&w.along_net),
            "atLimit": encode_rational(&w.at_limit),
        })),
    }))
}

pub fn product(m: &Manifest) -> Result<Value> {
    let space = require(&m.space, "space")?;
    let w = require(&m.weight, "weight")?;
    let (x, y) = (require(&m.x, "x")?, require(&m.y, "y")?);
    let p = WeightProduct::new(space, w.clone())?;
    let xy = p.mul(x, y)?;
    let witness = submultiplicativity_witness(space, w)?.map(|(a, b)| -> Result<Value> {
        let ab = p.mul(&a, &b)?;
        Ok(json!({
            "pair": pair(&a, &b),
            "productNorm": encode_rational(&space.norm(&ab)?),
            "normBound": encode_rational(&(space.norm(&a)? * space.norm(&b)?)),
        }))
    });
    Ok(json!({
        "space": encode_space(space),
        "weight": encode_weight(w),
        "x": encode_element(x),
        "y": encode_element(y),
        "product": encode_element(&xy),
        "submultiplicative": is_submultiplicative(space, w)?,
        "submultiplicativityWitness": witness.transpose()?,
    }))
}

fn encode_float(x: &FloatElement) -> Value {
    let list = |v: &[f64]| Value::Array(v.iter().map(|a| Value::String(format!("{a:?}"))).collect());
    match x {
        FloatElement::Finite(v) => list(v),
        FloatElement::Seq { prefix, tail } => json!({"prefix": list(prefix), "tail": format!("{tail:?}")}),
        FloatElement::Pair(a, b) => json!({"left": encode_float(a), "right": encode_float(b)}),
    }
}

pub fn root(m: &Manifest) -> Result<Value> {
    let space = require(&m.space, "space")?;
    let x = require(&m.x, "x")?;
    let n = m.degree.unwrap_or(2);
    let r = nth_root(space, x, n)?;
    let res = root_residuals(space, x, &r.approx, n)?;
    if !res.within_tolerance() {
        return Err(Error::InvariantBreach(format!("root residuals {res:?} exceed the tolerance")));
    }
    Ok(json!({
        "space": encode_space(space),
        "x": encode_element(x),
        "degree": n,
        "exact": r.exact.as_ref().map(encode_element),
        "approx": encode_float(&r.approx),
        "powerResidual": format!("{:e}", res.power),
        "normResidual": format!("{:e}", res.norm),
        "tolerance": format!("{:e}", res.tolerance),
    }))
}

fn axioms(report: &AxiomReport) -> Value {
    json!({
        "accepted": report.accepted(),
        "checks": report.checks,
        "violations": report.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
    })
}

fn probe_depth(m: &Manifest) -> usize {
    m.weight.as_ref().map_or(0, Weight::depth) + 2
}

pub fn check_falgebra(m: &Manifest) -> Result<Value> {
    let space = require(&m.space, "space")?;
    let given = [m.weight.is_some(), m.al_weight.is_some(), m.tensor.is_some()].iter().filter(|b| **b).count();
    if given != 1 {
        return Err(Error::Schema("check-falgebra needs exactly one of \"weight\", \"alWeight\", \"tensor\"".into()));
    }
    let mut out = json!({"space": encode_space(space)});
    if let Some(w) = &m.weight {
        let p = WeightProduct::new(space, w.clone())?;
        out["weight"] = encode_weight(w);
        out["axioms"] = axioms(&verify_falgebra_axioms(&p, probe_depth(m))?);
    } else if let Some(w) = &m.al_weight {
        let p = AlProduct::new(space, w.clone())?;
        out["alWeight"] = encode_list(w.values());
        out["axioms"] = axioms(&verify_falgebra_axioms(&p, 0)?);
    } else if let Some(t) = &m.tensor {
        let p = TensorProduct::new(space, t.clone())?;
        let report = verify_falgebra_axioms(&p, 0)?;
        let decision = match space {
            ModelSpace::FiniteSup { .. } => decide_tensor(space, t)?.map(|w| encode_weight(&w)),
            ModelSpace::FiniteAl { .. } => al_decide_tensor(space, t)?.map(|w| encode_list(w.values())),
            _ => decide_atomic_tensor(space, t)?.map(|d| encode_list(&d)),
        };
        out["tensor"] = encode_tensor(t);
        out["accepted"] = json!(decision.is_some());
        out["decidedWeight"] = decision.unwrap_or(Value::Null);
        out["axioms"] = axioms(&report);
    }
    Ok(out)
}

pub fn check_hom(m: &Manifest) -> Result<Value> {
    let domain = require(&m.space, "space")?.clone();
    let codomain = m.codomain.clone().unwrap_or_else(|| domain.clone());
    let op = Operator::new(domain.clone(), codomain.clone(), require(&m.operator, "operator")?.clone())?;
    let lattice = is_lattice_hom(&op)?;
    let algebra = is_am_algebra_hom(&op)?;
    let ball = match ball_square_condition(&op) {
        Ok(b) => {
            json!({"holds": b.holds, "imageOfUnit": encode_element(&b.image_of_unit), "square": encode_element(&b.square)})
        }
        Err(Error::Unsupported(msg)) => json!({"unsupported": msg}),
        Err(e) => return Err(e),
    };
    let (phi, reconstructs) = if algebra.holds {
        let form = composition_form(&op)?;
        let phi: Vec<Value> =
            form.phi.iter().map(|(b, a)| json!({"atom": unit_name(b), "image": a.as_ref().map(unit_name)})).collect();
        (json!(phi), json!(form.reproduces(&op)?))
    } else {
        (Value::Null, Value::Null)
    };
    let row_rule = match satisfies_row_rule(&op) {
        Ok(b) => json!(b),
        Err(Error::Unsupported(_)) => Value::Null,
        Err(e) => return Err(e),
    };
    let central = if op.is_endomorphism() {
        decide_central(&op)?
            .map(|d| json!({"symbol": encode_weight(d.symbol.values()), "norm": encode_rational(&d.norm)}))
            .unwrap_or(Value::Null)
    } else {
        Value::Null
    };
    Ok(json!({
        "space": encode_space(&domain),
        "codomain": encode_space(&codomain),
        "operator": encode_operator(op.spec()),
        "latticeHom": lattice.holds,
        "latticeHomWitness": lattice.witness.as_ref().map(encode_element),
        "algebraHom": algebra.holds,
        "algebraHomWitness": algebra.witness.as_ref().map(|(x, y)| pair(x, y)),
        "ballSquare": ball,
        "phi": phi,
        "reconstructs": reconstructs,
        "rowRule": row_rule,
        "central": central,
    }))
}

fn band_product(space: &ModelSpace, band: &Band, weight: Option<&AlWeight>) -> Result<LiftedProduct> {
    let b = band_space(space, band)?;
    let inner: Box<dyn Product> = match &b {
        ModelSpace::FiniteAl { atoms: 0, .. } => Box::new(ZeroProduct::new(&b)),
        ModelSpace::FiniteAl { atoms, .. } => {
            let w = match weight {
                Some(w) if w.values().len() == *atoms => w.clone(),
                Some(w) => {
                    return Err(Error::InvalidArgument(format!(
                        "alWeight has {} entries, the band has {atoms} atoms",
                        w.values().len()
                    )))
                }
                None => AlWeight::new(vec![scalar::one(); *atoms])?,
            };
            Box::new(AlProduct::new(&b, w)?)
        }
        _ => Box::new(am_product(&b)?),
    };
    lift_band_product(space, band.clone(), inner)
}

pub fn al_product(m: &Manifest) -> Result<Value> {
    let space = require(&m.space, "space")?;
    let mut out = json!({
        "space": encode_space(space),
        "onlyZeroProduct": only_zero_product(space),
    });
    if let Some(p) = atom_product(space)? {
        out["atomProductBand"] = json!(p.band().to_string());
        out["atomProductAxioms"] = axioms(&verify_falgebra_axioms(&p, 0)?);
    }
    let product: Option<Box<dyn Product>> = match (&m.band, &m.al_weight) {
        (Some(band), w) => {
            let p = band_product(space, band, w.as_ref())?;
            out["band"] = encode_band(band);
            out["bandSpace"] = encode_space(&band_space(space, band)?);
            out["bandProductAxioms"] = axioms(&verify_falgebra_axioms(&p, 0)?);
            Some(Box::new(p))
        }
        (None, Some(w)) => Some(Box::new(AlProduct::new(space, w.clone())?)),
        (None, None) => None,
    };
    if let Some(w) = &m.al_weight {
        out["alWeight"] = encode_list(w.values());
        out["submultiplicative"] = json!(al_is_submultiplicative(w));
        if m.band.is_none() {
            out["submultiplicativityWitness"] =
                al_submultiplicativity_witness(space, w)?.map(|(a, b)| pair(&a, &b)).unwrap_or(Value::Null);
        }
    }
    if let (Some(p), Some(x), Some(y)) = (&product, &m.x, &m.y) {
        out["x"] = encode_element(x);
        out["y"] = encode_element(y);
        out["product"] = encode_element(&p.mul(x, y)?);
    }
    if let Some(t) = &m.tensor {
        out["tensor"] = encode_tensor(t);
        out["decidedWeight"] = decide_atomic_tensor(space, t)?.map(|d| encode_list(&d)).unwrap_or(Value::Null);
    }
    Ok(out)
}

fn tensor_case(c: &TensorCase) -> Value {
    json!({"tensor": encode_tensor(&c.tensor), "decided": c.decided, "verified": c.verified})
}

fn hom_case(c: &HomCase) -> Value {
    json!({
        "domainWeights": encode_list(&c.domain_weights),
        "codomainWeights": encode_list(&c.codomain_weights),
        "matrix": c.rows.iter().map(|r| encode_list(r)).collect::<Vec<_>>(),
        "algebraHom": c.algebra_hom,
        "latticeAndBallSquare": c.lattice_and_ball_square,
        "compositionReconstructs": c.composition_reconstructs,
    })
}

/// Runs a sweep; the boolean is whether it found no discrepancy.
pub fn sweep(m: &Manifest, workers: Option<usize>) -> Result<(Value, bool)> {
    let spec = require(&m.sweep, "sweep")?;
    Ok(match spec {
        SweepSpec::Tensor { values } => {
            let space = require(&m.space, "space")?;
            let r = tensor_sweep(space, values, workers)?;
            let clean = r.clean();
            (
                json!({
                    "kind": "tensor",
                    "space": encode_space(space),
                    "values": encode_list(values),
                    "cases": r.cases,
                    "accepted": r.accepted,
                    "discrepancies": r.discrepancies,
                    "reproductionFailures": r.reproduction_failures,
                    "annihilationFailures": r.annihilation_failures,
                    "bandRejections": r.band_rejections,
                    "examples": r.examples.iter().map(tensor_case).collect::<Vec<_>>(),
                    "clean": clean,
                }),
                clean,
            )
        }
        SweepSpec::Identity { grid } => {
            let space = require(&m.space, "space")?;
            let r = am_product_is_unique(space, grid)?;
            (
                json!({
                    "kind": "identity",
                    "space": encode_space(space),
                    "grid": encode_list(grid),
                    "weightsChecked": r.weights_checked,
                    "identityWeights": r.identity_weights.iter().map(encode_weight).collect::<Vec<_>>(),
                    "unique": r.unique,
                    "clean": r.unique,
                }),
                r.unique,
            )
        }
        SweepSpec::Hom { max_n, max_m, weights, entries } => {
            let r = hom_sweep(*max_n, *max_m, weights, entries, workers)?;
            let clean = r.discrepancies == 0;
            (
                json!({
                    "kind": "hom",
                    "maxN": max_n,
                    "maxM": max_m,
                    "weights": encode_list(weights),
                    "entries": encode_list(entries),
                    "cases": r.cases,
                    "algebraHoms": r.algebra_homs,
                    "discrepancies": r.discrepancies,
                    "examples": r.examples.iter().map(hom_case).collect::<Vec<_>>(),
                    "clean": clean,
                }),
                clean,
            )
        }
    })
}

//! Report values for each subcommand. Every report is plain data so that
//! emitted JSON can be parsed back and compared with a fresh computation.

use minknot::braidgen::{
    braid_word, crossing_schedule, crossing_sign_closed, crossing_sign_direct, signed_schedule, symmetry_class,
    writhe, Closure, Crossing, SymmetryClass,
};
use minknot::catalog::{Catalog, Identification};
use minknot::invariants::{
    alexander, arf_diagnostic, at_minus_one, fibered_necessary, jones, rolfsen_coeffs, square_mod2, LaurentPoly,
    RolfsenCoeffs, MAX_JONES_STRANDS,
};
use minknot::oracle::{certify_schedule, min_separation, CrossingReport, CurveSampler};
use minknot::params::{
    canonical_phase, critical_phases, epsilon_offset, rational_str, validate, validate_canonical, KnotParams, PhaseSet,
};
use minknot::{Error, Rational, Result};
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BraidReport {
    pub params: KnotParams,
    /// Signed generators: `+g` for `σ_g`, `-g` for its inverse.
    pub word: Vec<i32>,
    pub writhe: i64,
    pub closure: Closure,
    pub crossings: Vec<Crossing>,
}

pub fn braid_report(params: &KnotParams) -> Result<BraidReport> {
    let crossings = signed_schedule(params)?;
    let word = braid_word(params)?;
    Ok(BraidReport {
        params: *params,
        word: word.to_signed(),
        writhe: writhe(&word),
        closure: minknot::braidgen::closure_permutation(&word),
        crossings,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvariantsReport {
    pub params: KnotParams,
    pub writhe: i64,
    pub alexander: LaurentPoly,
    pub rolfsen: RolfsenCoeffs,
    pub determinant: i64,
    pub arf_diagnostic: u8,
    pub square_mod2: bool,
    pub fibered_necessary: bool,
    pub symmetry: SymmetryClass,
    pub jones: Option<LaurentPoly>,
    pub identification: Identification,
}

pub fn invariants_report(params: &KnotParams, catalog: &Catalog) -> Result<InvariantsReport> {
    let word = braid_word(params)?;
    let alex = alexander(&word)?;
    let v = if params.strands as usize <= MAX_JONES_STRANDS { Some(jones(&word)?) } else { None };
    let e = writhe(&word);
    Ok(InvariantsReport {
        params: *params,
        writhe: e,
        rolfsen: rolfsen_coeffs(&alex)?,
        determinant: at_minus_one(&alex).to_i64().map(i64::abs).unwrap_or(i64::MAX),
        arf_diagnostic: arf_diagnostic(&alex),
        square_mod2: square_mod2(&alex),
        fibered_necessary: fibered_necessary(&alex),
        symmetry: symmetry_class(params.strands, params.p, params.q),
        identification: catalog.identify(&alex, v.as_ref(), e),
        jones: v,
        alexander: alex,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub p: u32,
    pub q: u32,
    #[serde(with = "rational_str")]
    pub phase: Rational,
    pub writhe: Option<i64>,
    pub rolfsen: Option<RolfsenCoeffs>,
    /// Best identification candidate, or `unidentified [..]`.
    pub class: String,
    pub candidates: Vec<String>,
    pub symmetry: SymmetryClass,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Periodicity {
    /// Rows whose Alexander polynomial was recomputed at `p + 2qN`.
    pub checked: usize,
    pub agreeing: usize,
    /// `(p, q)` of rows where the two values differ.
    pub mismatches: Vec<(u32, u32)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanClass {
    pub class: String,
    /// Smallest `(p, q)` realising the class.
    pub first: (u32, u32),
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub strands: u32,
    pub rows: Vec<ScanRow>,
    pub classes: Vec<ScanClass>,
    pub periodicity: Periodicity,
}

fn class_of(inv: &InvariantsReport) -> String {
    match inv.identification.best() {
        Some(c) => c.label.clone(),
        None => format!("unidentified {}", inv.rolfsen),
    }
}

/// One row per `(p, q)` pair passing validation. `p_range` defaults to one
/// full period `N+1 ..= N+2qN`.
pub fn scan_report(
    n: u32,
    qs: &[u32],
    p_range: Option<(u32, u32)>,
    catalog: &Catalog,
) -> Result<ScanReport> {
    let mut rows = Vec::new();
    let mut periodicity = Periodicity { checked: 0, agreeing: 0, mismatches: vec![] };
    for &q in qs {
        let (lo, hi) = p_range.unwrap_or((n + 1, n + 2 * q * n));
        for p in lo..=hi {
            let Ok(params) = validate_canonical(n, p, q) else { continue };
            let symmetry = symmetry_class(n, p, q);
            let row = match invariants_report(&params, catalog) {
                Ok(inv) => {
                    let shifted = validate_canonical(n, p + 2 * q * n, q)
                        .and_then(|k| braid_word(&k))
                        .and_then(|w| alexander(&w));
                    periodicity.checked += 1;
                    match shifted {
                        Ok(a) if a == inv.alexander => periodicity.agreeing += 1,
                        _ => periodicity.mismatches.push((p, q)),
                    }
                    ScanRow {
                        p,
                        q,
                        phase: params.phase,
                        writhe: Some(inv.writhe),
                        rolfsen: Some(inv.rolfsen.clone()),
                        class: class_of(&inv),
                        candidates: inv.identification.labels().iter().map(|s| s.to_string()).collect(),
                        symmetry,
                        error: None,
                    }
                }
                Err(e) => ScanRow {
                    p,
                    q,
                    phase: params.phase,
                    writhe: None,
                    rolfsen: None,
                    class: "error".into(),
                    candidates: vec![],
                    symmetry,
                    error: Some(e.to_string()),
                },
            };
            rows.push(row);
        }
    }
    let mut classes: Vec<ScanClass> = Vec::new();
    for r in rows.iter().filter(|r| r.error.is_none()) {
        match classes.iter_mut().find(|c| c.class == r.class) {
            Some(c) => c.count += 1,
            None => classes.push(ScanClass { class: r.class.clone(), first: (r.p, r.q), count: 1 }),
        }
    }
    Ok(ScanReport { strands: n, rows, classes, periodicity })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhasesReport {
    #[serde(flatten)]
    pub set: PhaseSet,
    #[serde(with = "rational_str")]
    pub canonical: Rational,
}

pub fn phases_report(n: u32, p: u32, q: u32) -> Result<PhasesReport> {
    // range and coprimality checks
    validate_canonical(n, p, q)?;
    Ok(PhasesReport { set: critical_phases(n, p, q)?, canonical: canonical_phase(n, p, q)? })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub params: KnotParams,
    /// Exact schedule (closed-formula signs) against the sampled curve.
    pub crossings: CrossingReport,
    /// Ordinals where the closed formula and the direct evaluation differ.
    pub closed_vs_direct: Vec<usize>,
    pub min_separation: f64,
    pub clean: bool,
}

pub fn verify_report(params: &KnotParams) -> Result<VerifyReport> {
    let eps = epsilon_offset(params.strands, params.q);
    let mut sched = crossing_schedule(params.strands, params.q, eps)?;
    let mut closed_vs_direct = Vec::new();
    for c in &mut sched {
        let (closed, _) = crossing_sign_closed(params, c);
        if crossing_sign_direct(params, c)? != closed {
            closed_vs_direct.push(c.ordinal);
        }
        c.sign = Some(closed);
    }
    let sampler = CurveSampler::new(*params);
    let crossings = certify_schedule(&sched, &sampler)?;
    let clean = crossings.is_clean() && closed_vs_direct.is_empty();
    Ok(VerifyReport { params: *params, crossings, closed_vs_direct, min_separation: min_separation(&sampler), clean })
}

/// Validates `(N,p,q)` with an optional explicit phase.
pub fn params_from(n: u32, p: u32, q: u32, phase: Option<Rational>) -> Result<KnotParams> {
    match phase {
        Some(phi) => validate(n, p, q, phi),
        None => validate_canonical(n, p, q),
    }
}

/// Errors that mean the exact and numeric sides disagree, as opposed to bad input.
pub fn is_verification_error(e: &Error) -> bool {
    matches!(e, Error::FormulaMismatch { .. } | Error::DegenerateSign { .. } | Error::UnresolvedCrossing { .. })
}

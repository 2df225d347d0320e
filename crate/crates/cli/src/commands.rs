//! Command implementations shared by the binary and the tests.

use std::time::Instant;

use tropcrit::critical::{critical_points_fast, critical_points_oracle, verify_theorem, OracleOutcome};
use tropcrit::invariants::{beta, char_poly};
use tropcrit::taut::{divisibility_check, DivisibilityBranch};
use tropcrit::{AffineMatroid, CriticalPoint, Limits, RationalVector, Relabeling, SignedPath, Subset};

use crate::document::MatroidDocument;
use crate::error::{exit, CliError, Result};
use crate::report::{
    Branch, ChamberDocument, CommandName, Method, PathDocument, PointDocument, ResultDocument,
    SampleDocument, TautDocument, VerificationDocument,
};

/// Environment variable overriding both enumeration caps.
pub const MAX_GROUND_VAR: &str = "TROPCRIT_MAX_GROUND";

#[derive(Clone, Debug)]
pub struct Options {
    /// Comma-separated rationals, or `auto` for `(1, 10, 100, ...)`.
    pub w: Option<String>,
    pub oracle: bool,
    pub samples: usize,
    pub seed: u64,
    pub limits: Limits,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            w: None,
            oracle: false,
            samples: 3,
            seed: 0,
            limits: Limits::default(),
        }
    }
}

/// Default limits, or both caps set from `TROPCRIT_MAX_GROUND`.
pub fn limits_from_env() -> Result<Limits> {
    match std::env::var(MAX_GROUND_VAR) {
        Err(_) => Ok(Limits::default()),
        Ok(v) => {
            let cap = v
                .trim()
                .parse()
                .map_err(|_| CliError::Parse(format!("{MAX_GROUND_VAR}={v:?} is not an integer")))?;
            Ok(Limits {
                max_flag_ground: cap,
                max_taut_ground: cap,
            })
        }
    }
}

/// A finished command: the document to emit and the exit code.
#[derive(Debug)]
pub struct Outcome {
    pub document: ResultDocument,
    pub exit_code: u8,
}

pub fn run(command: CommandName, doc: &MatroidDocument, opts: &Options) -> Result<Outcome> {
    let start = Instant::now();
    let mut outcome = match command {
        CommandName::Beta => cmd_beta(doc),
        CommandName::Critical => cmd_critical(doc, opts),
        CommandName::Verify => cmd_verify(doc, opts),
        CommandName::Taut => cmd_taut(doc, opts),
    }?;
    outcome.document.timing_us = Some(start.elapsed().as_micros() as u64);
    Ok(outcome)
}

fn ok(document: ResultDocument) -> Outcome {
    Outcome {
        document,
        exit_code: exit::SUCCESS,
    }
}

/// Canonical-to-input translation for one affine matroid.
struct Labels<'a> {
    doc: &'a MatroidDocument,
    map: &'a Relabeling,
}

impl Labels<'_> {
    fn element(&self, e: usize) -> usize {
        self.map.old(e)
    }

    fn subset(&self, s: Subset) -> Vec<usize> {
        let mut v: Vec<usize> = s.iter().map(|e| self.element(e)).collect();
        v.sort();
        v
    }

    fn path(&self, block: Subset, path: &SignedPath) -> PathDocument {
        let edges: Vec<usize> = path.edges.iter().map(|&e| self.element(e)).collect();
        let expression = if edges.is_empty() {
            "0".to_string()
        } else {
            edges
                .iter()
                .enumerate()
                .map(|(k, &e)| {
                    let sign = match k {
                        0 => "",
                        _ if k % 2 == 1 => " - ",
                        _ => " + ",
                    };
                    format!("{sign}w[{}]", self.doc.label(e))
                })
                .collect()
        };
        PathDocument {
            block: self.subset(block),
            edges,
            expression,
        }
    }

    fn point(&self, p: &CriticalPoint) -> PointDocument {
        PointDocument {
            basis: self.subset(p.basis),
            strata: p.flag.strata().into_iter().map(|s| self.subset(s)).collect(),
            dual_strata: p.dual_flag.strata().into_iter().map(|s| self.subset(s)).collect(),
            x: p.x.to_strings(),
            y: p.y.to_strings(),
            x_paths: p
                .partition
                .blocks()
                .iter()
                .zip(&p.x_paths)
                .map(|(&b, path)| self.path(b, path))
                .collect(),
            y_paths: p
                .dual_partition
                .blocks()
                .iter()
                .zip(&p.y_paths)
                .map(|(&b, path)| self.path(b, path))
                .collect(),
        }
    }
}

struct Prepared {
    affine: AffineMatroid,
    special: usize,
}

fn prepare(doc: &MatroidDocument) -> Result<Prepared> {
    let m = doc.to_matroid()?;
    let special = doc.special_index(m.ground_size())?;
    let affine = AffineMatroid::with_special(&m, special)?;
    Ok(Prepared { affine, special })
}

fn with_coordinates(mut result: ResultDocument, prepared: &Prepared) -> ResultDocument {
    let map = prepared.affine.original_labels();
    result.special_element = Some(prepared.special);
    result.coordinates = Some((1..=prepared.affine.n()).map(|i| map.old(i)).collect());
    result
}

pub fn cmd_beta(doc: &MatroidDocument) -> Result<Outcome> {
    let m = doc.to_matroid()?;
    let chi = char_poly(&m)?;
    let mut result = ResultDocument::new(CommandName::Beta, doc.clone());
    result.beta = Some(beta(&m)?);
    result.characteristic_polynomial = Some(chi.coefficients().to_vec());
    Ok(ok(result))
}

fn parse_weights(spec: Option<&str>, n: usize) -> Result<RationalVector> {
    match spec.map(str::trim) {
        None | Some("auto") => Ok(RationalVector::powers_of_ten(n)),
        Some(text) => {
            let w = RationalVector::parse_list(1, text)
                .ok_or_else(|| CliError::Parse(format!("cannot parse weights {text:?}")))?;
            w.check_indices(1, n)?;
            Ok(w)
        }
    }
}

pub fn cmd_critical(doc: &MatroidDocument, opts: &Options) -> Result<Outcome> {
    let prepared = prepare(doc)?;
    let a = &prepared.affine;
    let w = parse_weights(opts.w.as_deref(), a.n())?;
    let points = if opts.oracle {
        match critical_points_oracle(a, &w, &opts.limits)? {
            OracleOutcome::Points(p) => p,
            OracleOutcome::Degenerate(d) => return Err(CliError::DegenerateWeights(d.to_string())),
        }
    } else {
        critical_points_fast(a, &w)?
    };
    let b = beta(a.matroid())?;
    let labels = Labels {
        doc,
        map: a.original_labels(),
    };
    let mut result = with_coordinates(ResultDocument::new(CommandName::Critical, doc.clone()), &prepared);
    result.method = Some(if opts.oracle { Method::Oracle } else { Method::Fast });
    result.w = Some(w.to_strings());
    result.beta = Some(b);
    result.count = Some(points.len());
    result.points = Some(points.iter().map(|p| labels.point(p)).collect());
    let mut exit_code = exit::SUCCESS;
    if points.len() as u64 != b {
        result
            .discrepancies
            .push(format!("{} critical points but beta = {b}", points.len()));
        exit_code = exit::VIOLATION;
    }
    Ok(Outcome {
        document: result,
        exit_code,
    })
}

pub fn cmd_verify(doc: &MatroidDocument, opts: &Options) -> Result<Outcome> {
    let m = doc.to_matroid()?;
    let special = doc.special_index(m.ground_size())?;
    let report = verify_theorem(&m, special, opts.samples, opts.seed, &opts.limits);
    let mut result = ResultDocument::new(CommandName::Verify, doc.clone());
    result.special_element = Some(special);
    result.seed = Some(opts.seed);
    result.beta = report.beta;
    if let Ok(a) = AffineMatroid::with_special(&m, special) {
        let map = a.original_labels();
        result.coordinates = Some((1..=a.n()).map(|i| map.old(i)).collect());
        let labels = Labels { doc, map };
        result.points = report
            .fast_points
            .as_ref()
            .map(|ps| ps.iter().map(|p| labels.point(p)).collect());
        result.w = report.rapid_w.as_ref().map(RationalVector::to_strings);
        result.count = report.fast_count();
    }
    let errors: Vec<String> = report.errors.iter().map(ToString::to_string).collect();
    if errors.is_empty() && !report.counts_agree {
        result.discrepancies.push(format!(
            "counts disagree: beta {:?}, fast {:?}, oracle {:?}",
            report.beta,
            report.fast_count(),
            report.oracle_counts()
        ));
    }
    if errors.is_empty() && !report.point_sets_agree {
        result
            .discrepancies
            .push("fast and oracle point sets differ for (1, 10, 100, ...)".into());
    }
    result.discrepancies.extend(errors.iter().cloned());
    result.verification = Some(VerificationDocument {
        fast_count: report.fast_count(),
        oracle_counts: report.oracle_counts(),
        samples: report
            .samples
            .iter()
            .map(|s| SampleDocument {
                w: s.w.to_strings(),
                count: s.count,
                discarded: s.discarded,
            })
            .collect(),
        resamples: report.resamples,
        counts_agree: report.counts_agree,
        point_sets_agree: report.point_sets_agree,
        all_agree: report.all_agree(),
        errors,
    });
    let exit_code = match report.errors.first() {
        Some(e) => CliError::Core(e.clone()).exit_code(),
        None if report.all_agree() => exit::SUCCESS,
        None => exit::VIOLATION,
    };
    Ok(Outcome {
        document: result,
        exit_code,
    })
}

pub fn cmd_taut(doc: &MatroidDocument, opts: &Options) -> Result<Outcome> {
    let prepared = prepare(doc)?;
    let a = &prepared.affine;
    let report = divisibility_check(a, &opts.limits)?;
    let labels = Labels {
        doc,
        map: a.original_labels(),
    };
    let var = |i: usize| format!("t[{}]", doc.label(labels.element(i)));
    let certificates: Vec<ChamberDocument> = report
        .certificates
        .iter()
        .map(|c| ChamberDocument {
            permutation: c.permutation.iter().map(|&e| labels.element(e)).collect(),
            basis: labels.subset(c.basis),
            branch: match c.branch {
                DivisibilityBranch::SpecialOutsideBasis => Branch::SpecialOutsideBasis,
                DivisibilityBranch::Cancellation => Branch::Cancellation,
            },
            product: c.product.display_with(var).to_string(),
            quotient: c.quotient.as_ref().map(|q| q.display_with(var).to_string()),
            passed: c.passed(),
        })
        .collect();
    let mut result = with_coordinates(ResultDocument::new(CommandName::Taut, doc.clone()), &prepared);
    for c in certificates.iter().filter(|c| !c.passed) {
        result
            .discrepancies
            .push(format!("chamber {:?} is not divisible", c.permutation));
    }
    let passed = report.passed();
    result.taut = Some(TautDocument {
        chambers: certificates.len(),
        passed,
        certificates,
    });
    Ok(Outcome {
        document: result,
        exit_code: if passed { exit::SUCCESS } else { exit::VIOLATION },
    })
}

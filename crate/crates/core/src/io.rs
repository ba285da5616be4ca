//! Versioned JSON documents. Every rational is a string `"p"` or `"p/q"`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::colored::{
    verify_colorful, ColorClasses, ColoredAlternative, ColoredOutcome, ColoredSolution,
    ColorfulPartition,
};
use crate::error::{Error, Result};
use crate::exact::{parse_rat, rat_to_string, RVec, Rat};
use crate::sarkaria::{Alternative, PmSolution, Recovery};
use crate::search::{Found, RadonSpectrum, SearchOutcome, Separation};
use crate::tverberg::{
    certificate_violations, sign_pattern, AffineCertificate, Partition, PointConfig,
};

pub const SCHEMA: &str = "tvpm/1";

fn schema() -> String {
    SCHEMA.to_string()
}

fn check_schema(s: &str) -> Result<()> {
    if s == SCHEMA {
        Ok(())
    } else {
        Err(Error::Config(format!(
            "unsupported schema {s:?}, expected {SCHEMA:?}"
        )))
    }
}

pub fn vec_to_strings(v: &RVec) -> Vec<String> {
    v.iter().map(rat_to_string).collect()
}

pub fn strings_to_vec(v: &[String]) -> Result<RVec> {
    v.iter().map(|s| parse_rat(s)).collect()
}

fn rats_to_strings(v: &[Rat]) -> Vec<String> {
    v.iter().map(rat_to_string).collect()
}

fn strings_to_rats(v: &[String]) -> Result<Vec<Rat>> {
    v.iter().map(|s| parse_rat(s)).collect()
}

/// A point configuration, optionally with a prescribed set and its seed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigDoc {
    #[serde(default = "schema")]
    pub schema: String,
    pub d: usize,
    pub r: usize,
    pub points: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
}

impl ConfigDoc {
    pub fn from_config(config: &PointConfig) -> Self {
        ConfigDoc {
            schema: schema(),
            d: config.d(),
            r: config.r(),
            points: config.points().iter().map(vec_to_strings).collect(),
            m: None,
            seed: None,
            generator: None,
        }
    }

    pub fn to_config(&self) -> Result<PointConfig> {
        check_schema(&self.schema)?;
        let points = self
            .points
            .iter()
            .map(|p| strings_to_vec(p))
            .collect::<Result<_>>()?;
        PointConfig::new(self.d, self.r, points)
    }
}

/// Colour classes, optionally with a prescribed set of class indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassesDoc {
    #[serde(default = "schema")]
    pub schema: String,
    pub d: usize,
    pub r: usize,
    pub classes: Vec<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl ClassesDoc {
    pub fn from_classes(cc: &ColorClasses) -> Self {
        ClassesDoc {
            schema: schema(),
            d: cc.d(),
            r: cc.r(),
            classes: cc
                .classes()
                .iter()
                .map(|c| c.iter().map(vec_to_strings).collect())
                .collect(),
            m: None,
            seed: None,
        }
    }

    pub fn to_classes(&self) -> Result<ColorClasses> {
        check_schema(&self.schema)?;
        let classes = self
            .classes
            .iter()
            .map(|c| {
                c.iter()
                    .map(|p| strings_to_vec(p))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        ColorClasses::new(self.d, self.r, classes)
    }
}

/// A partition with its affine certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDoc {
    #[serde(default = "schema")]
    pub schema: String,
    /// `"certificate"`.
    pub result: String,
    pub partition: Vec<Vec<usize>>,
    pub z: Vec<String>,
    pub alpha: BTreeMap<usize, String>,
    pub negatives: Vec<usize>,
    #[serde(default)]
    pub zero_set: Vec<usize>,
    pub gamma: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alternative: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partitions_scanned: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degenerate_skipped: Option<usize>,
}

impl CertificateDoc {
    pub fn new(partition: &Partition, cert: &AffineCertificate) -> Self {
        CertificateDoc {
            schema: schema(),
            result: "certificate".into(),
            partition: partition.parts().to_vec(),
            z: vec_to_strings(&cert.z),
            alpha: cert.alpha.iter().map(rat_to_string).enumerate().collect(),
            negatives: cert.negatives.clone(),
            zero_set: sign_pattern(cert).zero_set,
            gamma: rat_to_string(&cert.gamma),
            alternative: None,
            m: None,
            partitions_scanned: None,
            degenerate_skipped: None,
        }
    }

    pub fn from_found(found: &Found) -> Self {
        Self::new(&found.partition, &found.certificate)
    }

    pub fn parse(&self, n: usize) -> Result<(Partition, AffineCertificate)> {
        check_schema(&self.schema)?;
        let partition = Partition::new(self.partition.clone(), n)?;
        let mut alpha = Vec::with_capacity(self.alpha.len());
        for (pos, (&i, s)) in self.alpha.iter().enumerate() {
            if i != pos {
                return Err(Error::Config(format!("alpha is missing index {pos}")));
            }
            alpha.push(parse_rat(s)?);
        }
        let z = strings_to_vec(&self.z)?;
        Ok((
            partition,
            AffineCertificate::new(z, alpha, parse_rat(&self.gamma)?),
        ))
    }
}

/// Output of an exhaustive search that found nothing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NotFoundDoc {
    #[serde(default = "schema")]
    pub schema: String,
    /// `"not_found"`.
    pub result: String,
    pub partitions_scanned: usize,
    pub degenerate_skipped: usize,
}

/// Renders a search outcome as a certificate or a not-found document.
pub fn search_outcome_json(out: &SearchOutcome, m: Option<Vec<usize>>) -> serde_json::Value {
    match &out.found {
        Some(found) => {
            let mut doc = CertificateDoc::from_found(found);
            doc.m = m;
            doc.partitions_scanned = Some(out.partitions_scanned);
            doc.degenerate_skipped = Some(out.degenerate_skipped);
            serde_json::to_value(doc)
        }
        None => serde_json::to_value(NotFoundDoc {
            schema: schema(),
            result: "not_found".into(),
            partitions_scanned: out.partitions_scanned,
            degenerate_skipped: out.degenerate_skipped,
        }),
    }
    .expect("documents serialize")
}

pub fn separation_json(sep: &Separation, m: &[usize]) -> serde_json::Value {
    match sep {
        Separation::Separated { normal, offset } => serde_json::json!({
            "schema": SCHEMA,
            "result": "separated",
            "m": m,
            "normal": vec_to_strings(normal),
            "offset": rat_to_string(offset),
        }),
        Separation::NotSeparated {
            point,
            m_weights,
            rest_weights,
        } => serde_json::json!({
            "schema": SCHEMA,
            "result": "not_separated",
            "m": m,
            "point": vec_to_strings(point),
            "m_weights": rats_to_strings(m_weights),
            "rest_weights": rats_to_strings(rest_weights),
        }),
    }
}

pub fn spectrum_json(s: &RadonSpectrum) -> serde_json::Value {
    let witnesses: BTreeMap<String, CertificateDoc> = s
        .witnesses
        .iter()
        .map(|(k, f)| (k.to_string(), CertificateDoc::from_found(f)))
        .collect();
    serde_json::json!({
        "schema": SCHEMA,
        "result": "spectrum",
        "achievable": s.achievable,
        "witnesses": witnesses,
        "partitions_scanned": s.partitions_scanned,
        "degenerate_skipped": s.degenerate_skipped,
        "affine_dependence": s.affine_dependence.as_ref().map(vec_to_strings),
    })
}

fn weights_json(w: &[(usize, Rat)]) -> BTreeMap<usize, String> {
    w.iter().map(|(i, x)| (*i, rat_to_string(x))).collect()
}

pub fn pm_solution_json(sol: &PmSolution, m: &[usize]) -> serde_json::Value {
    match &sol.recovery {
        Recovery::Certificate {
            partition,
            certificate,
            alternative,
        } => {
            let mut doc = CertificateDoc::new(partition, certificate);
            doc.alternative = Some(alternative.as_str().into());
            doc.m = Some(m.to_vec());
            let mut v = serde_json::to_value(doc).expect("documents serialize");
            v["separated"] = sol.separated.into();
            v["pivots"] = (sol.trace.len() - 1).into();
            v
        }
        Recovery::SeparationViolated {
            part,
            point,
            m_weights,
            rest_weights,
        } => serde_json::json!({
            "schema": SCHEMA,
            "result": "separation_violated",
            "m": m,
            "part": part,
            "point": vec_to_strings(point),
            "m_weights": weights_json(m_weights),
            "rest_weights": weights_json(rest_weights),
        }),
        Recovery::DegenerateGamma { partition } => serde_json::json!({
            "schema": SCHEMA,
            "result": "degenerate_gamma",
            "m": m,
            "partition": partition.parts(),
        }),
    }
}

/// A colourful partition with its per-class coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredCertificateDoc {
    #[serde(default = "schema")]
    pub schema: String,
    /// `"colored"`.
    pub result: String,
    pub assignment: Vec<Vec<usize>>,
    pub coefficients: Vec<String>,
    pub z: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alternative: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<Vec<usize>>,
}

impl ColoredCertificateDoc {
    pub fn new(cp: &ColorfulPartition) -> Self {
        ColoredCertificateDoc {
            schema: schema(),
            result: "colored".into(),
            assignment: cp.assignment.clone(),
            coefficients: rats_to_strings(&cp.coefficients),
            z: vec_to_strings(&cp.z),
            alternative: None,
            m: None,
        }
    }

    pub fn parse(&self) -> Result<ColorfulPartition> {
        check_schema(&self.schema)?;
        Ok(ColorfulPartition {
            assignment: self.assignment.clone(),
            coefficients: strings_to_rats(&self.coefficients)?,
            z: strings_to_vec(&self.z)?,
        })
    }
}

pub fn colored_solution_json(sol: &ColoredSolution) -> serde_json::Value {
    match &sol.outcome {
        ColoredOutcome::Colored {
            partition,
            alternative,
        } => {
            let mut doc = ColoredCertificateDoc::new(partition);
            doc.alternative = Some(alternative.as_str().into());
            doc.m = Some(sol.m_set.clone());
            serde_json::to_value(doc).expect("documents serialize")
        }
        ColoredOutcome::DegenerateGamma { assignment } => serde_json::json!({
            "schema": SCHEMA,
            "result": "degenerate_gamma",
            "m": sol.m_set,
            "assignment": assignment,
        }),
    }
}

/// Result of [`verify_json`]: empty `violations` means the certificate holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub kind: &'static str,
    pub violations: Vec<String>,
}

/// Independently re-checks a certificate document against its input
/// document. Dispatches on the certificate's `result` field.
pub fn verify_json(input: &serde_json::Value, cert: &serde_json::Value) -> Result<Verdict> {
    match cert.get("result").and_then(|v| v.as_str()) {
        Some("certificate") => {
            let config: ConfigDoc = serde_json::from_value(input.clone())?;
            let config = config.to_config()?;
            let doc: CertificateDoc = serde_json::from_value(cert.clone())?;
            let (partition, certificate) = doc.parse(config.n())?;
            let mut violations = certificate_violations(&config, &partition, &certificate);
            if doc.negatives != certificate.negatives {
                violations.push(format!(
                    "negatives {:?} do not match the signs of alpha {:?}",
                    doc.negatives, certificate.negatives
                ));
            }
            if let (Some(m), Some(alt)) = (&doc.m, &doc.alternative) {
                let complement: Vec<usize> = (0..config.n()).filter(|i| !m.contains(i)).collect();
                let expected = match alt.as_str() {
                    a if a == Alternative::InM.as_str() => m.clone(),
                    a if a == Alternative::Complement.as_str() => complement,
                    other => return Err(Error::Config(format!("unknown alternative {other:?}"))),
                };
                if certificate.negatives != expected {
                    violations.push(format!(
                        "alternative {alt}: negatives {:?}, expected {expected:?}",
                        certificate.negatives
                    ));
                }
            }
            Ok(Verdict {
                kind: "certificate",
                violations,
            })
        }
        Some("colored") => {
            let classes: ClassesDoc = serde_json::from_value(input.clone())?;
            let cc = classes.to_classes()?;
            let doc: ColoredCertificateDoc = serde_json::from_value(cert.clone())?;
            let cp = doc.parse()?;
            let mut violations = verify_colorful(&cc, &cp).violations;
            if let (Some(m), Some(alt)) = (&doc.m, &doc.alternative) {
                let positive_on_m = match alt.as_str() {
                    a if a == ColoredAlternative::MPositive.as_str() => true,
                    a if a == ColoredAlternative::MNegative.as_str() => false,
                    other => return Err(Error::Config(format!("unknown alternative {other:?}"))),
                };
                for (i, a) in cp.coefficients.iter().enumerate() {
                    let want_positive = m.contains(&i) == positive_on_m;
                    let ok = if want_positive {
                        *a > Rat::from_integer(0.into())
                    } else {
                        *a < Rat::from_integer(0.into())
                    };
                    if !ok {
                        violations
                            .push(format!("alternative {alt}: class {i} has coefficient {a}"));
                    }
                }
            }
            Ok(Verdict {
                kind: "colored",
                violations,
            })
        }
        other => Err(Error::Config(format!(
            "cannot verify a document with result {other:?}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::random_config;
    use crate::sarkaria::tverberg_pm;

    #[test]
    fn config_round_trip() {
        let c = random_config(2, 3, 3).unwrap();
        let doc = ConfigDoc::from_config(&c);
        let text = serde_json::to_string(&doc).unwrap();
        assert!(text.contains("\"schema\":\"tvpm/1\""));
        let back: ConfigDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_config().unwrap(), c);
    }

    #[test]
    fn schema_is_checked() {
        let doc: ConfigDoc =
            serde_json::from_str(r#"{"d":1,"r":2,"points":[["0"],["1"],["5/2"]]}"#).unwrap();
        assert_eq!(doc.to_config().unwrap().n(), 3);
        let doc: ConfigDoc =
            serde_json::from_str(r#"{"schema":"tvpm/9","d":1,"r":2,"points":[["0"],["1"],["2"]]}"#)
                .unwrap();
        assert!(doc.to_config().is_err());
        let doc: ConfigDoc =
            serde_json::from_str(r#"{"d":1,"r":2,"points":[["0.5"],["1"],["2"]]}"#).unwrap();
        assert!(doc.to_config().is_err());
    }

    #[test]
    fn certificates_verify_and_corruption_is_caught() {
        let c = random_config(2, 3, 9).unwrap();
        let input = serde_json::to_value(ConfigDoc::from_config(&c)).unwrap();
        let sol = tverberg_pm(&c, &[0]).unwrap();
        let cert = pm_solution_json(&sol, &[0]);
        if cert["result"] == "certificate" {
            assert!(verify_json(&input, &cert).unwrap().violations.is_empty());
            let mut bad = cert.clone();
            bad["z"][0] = "12345".into();
            let v = verify_json(&input, &bad).unwrap();
            assert!(v.violations.iter().any(|s| s.contains("coordinate 0")));
        }
    }
}

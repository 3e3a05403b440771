use clap::ValueEnum;
use mengerian::certificate::Certificate;
use mengerian::classify::{Caps, GraphSummary, IdealResult, KonigResult, MinorWitness, TuResult};
use mengerian::clutter::MfmcProbe;
use mengerian::ideal::is_normally_torsion_free_capped;
use mengerian::linalg::{format_rational, is_ideal, is_totally_unimodular};
use mengerian::{Clutter, Error, Graph};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Property {
    Tu,
    Ideal,
    Konig,
    Packing,
    Ntf,
    MfmcProbe,
}

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Property::Tu => "tu",
            Property::Ideal => "ideal",
            Property::Konig => "konig",
            Property::Packing => "packing",
            Property::Ntf => "ntf",
            Property::MfmcProbe => "mfmc-probe",
        }
    }
}

/// Output of `mengerian check`. `holds` is `null` when a bounded probe
/// found nothing.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckReport {
    pub schema: u32,
    pub property: String,
    pub t: usize,
    pub graph: GraphSummary,
    pub holds: Option<bool>,
    pub details: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

impl CheckReport {
    pub fn refuted(&self) -> bool {
        self.holds == Some(false)
    }

    /// Vertex labels for a DOT rendering of a fractional vertex.
    pub fn vertex_labels(&self) -> Option<Vec<String>> {
        match &self.certificate {
            Some(Certificate::FractionalVertex { coords, .. }) => {
                Some(coords.iter().map(format_rational).collect())
            }
            _ => None,
        }
    }
}

fn within(n: usize, cap: usize, what: &str) -> Result<(), CliError> {
    if n > cap {
        return Err(Error::Cap(format!("{what} on {n} vertices exceeds the cap {cap}")).into());
    }
    Ok(())
}

pub fn run(
    property: Property,
    g: &Graph,
    t: usize,
    c: &Clutter,
    caps: &Caps,
    packing_cap: Option<usize>,
    cmax: u32,
) -> Result<CheckReport, CliError> {
    let (holds, details, certificate) = match property {
        Property::Tu => {
            let r = TuResult::from(is_totally_unimodular(&c.incidence_matrix())?);
            let cert = r.witness.as_ref().map(|w| Certificate::non_tu(c, w));
            (Some(r.holds), serde_json::to_value(&r)?, cert)
        }
        Property::Ideal => {
            within(c.n(), caps.max_n, "vertex enumeration")?;
            let r = IdealResult::from(is_ideal(c)?);
            let cert = r.vertex.as_ref().map(|v| Certificate::FractionalVertex {
                clutter: c.clone(),
                coords: v.coords.clone(),
            });
            (Some(r.holds), serde_json::to_value(&r)?, cert)
        }
        Property::Konig => {
            let r = KonigResult::of(c);
            let cert = (!r.holds).then(|| Certificate::PackingViolation {
                clutter: c.clone(),
                deleted: Vec::new(),
                contracted: Vec::new(),
            });
            (Some(r.holds), serde_json::to_value(&r)?, cert)
        }
        Property::Packing => {
            if let Some(cap) = packing_cap {
                within(c.n(), cap, "minor scan")?;
            }
            let v = c.packing_violation()?.map(MinorWitness::from);
            let cert = v.as_ref().map(|w| Certificate::PackingViolation {
                clutter: c.clone(),
                deleted: w.deleted.clone(),
                contracted: w.contracted.clone(),
            });
            (Some(v.is_none()), json!({ "violation": v }), cert)
        }
        Property::Ntf => {
            within(c.n(), caps.max_n, "power computation")?;
            let r = is_normally_torsion_free_capped(c, Some(caps.max_power))?;
            let cert = r.violation().map(|(k, m)| Certificate::PowerGap {
                clutter: c.clone(),
                k,
                monomial: m.clone(),
            });
            (Some(r.holds()), serde_json::to_value(&r)?, cert)
        }
        Property::MfmcProbe => {
            let r = c.mengerian_bounded(cmax)?;
            let (holds, cert) = match &r {
                MfmcProbe::Refuted { cost, .. } => (
                    Some(false),
                    Some(Certificate::MfmcGap {
                        clutter: c.clone(),
                        cost: cost.clone(),
                    }),
                ),
                MfmcProbe::Undecided { .. } => (None, None),
            };
            (holds, serde_json::to_value(&r)?, cert)
        }
    };
    Ok(CheckReport {
        schema: mengerian::SCHEMA_VERSION,
        property: property.name().to_string(),
        t,
        graph: GraphSummary::of(g)?,
        holds,
        details,
        certificate,
    })
}

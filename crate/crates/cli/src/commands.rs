use std::path::Path;

use rayon::prelude::*;
use torsionlab::det_torsion::format::{self as complex_format, parse_frames, ParsedComplex};
use torsionlab::det_torsion::{alpha_beta, compute_homology, sign_n, torsion_phi, CellFrame};
use torsionlab::euler_cw::{self, format as cw_format};
use torsionlab::knots::{
    absolute_torsion_at, absolute_torsion_at_complex, alexander_poly, canonical_torsion,
    conway_from_torsion, conway_skein, parse_pd, KnotDiagram,
};
use torsionlab::scalar::parse_rational;
use torsionlab::verify::{run_all, verify_diagram, SignTable, SuiteOptions};
use torsionlab::{
    ChainComplex, ComplexSample, DetLineCoord, Error, EulerStructure, Field, FlatBundle,
    GradedDims, HomOrientation, RatFunc, SignResidue,
};

use crate::input::{diagram_text, read};
use crate::report::Report;

/// Coefficient field requested on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum FieldArg {
    Rational,
    Laurent,
    Ratfunc,
    Complex,
}

pub type CmdResult<T> = std::result::Result<T, String>;

fn err(e: Error) -> String {
    e.to_string()
}

fn residues(v: &[SignResidue]) -> String {
    v.iter()
        .map(|r| r.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn dims_string(d: &GradedDims) -> String {
    d.dims()
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn chain_torsion(
    file: &Path,
    frames: Option<&Path>,
    field: Option<FieldArg>,
) -> CmdResult<Report> {
    let text = read(file)?;
    let parsed = complex_format::parse(&text).map_err(err)?;
    if let Some(f) = field {
        let declared = parsed.kind().name();
        let wanted = match f {
            FieldArg::Rational => "rational",
            FieldArg::Laurent => "laurent",
            FieldArg::Ratfunc => "ratfunc",
            FieldArg::Complex => "complex",
        };
        if wanted != declared {
            return Err(format!(
                "{} declares field {declared}, not {wanted}",
                file.display()
            ));
        }
    }
    let frame_text = frames.map(read).transpose()?;
    let mut r = Report::new("chain-torsion");
    r.input(&file.display().to_string(), &text);
    if let (Some(p), Some(t)) = (frames, &frame_text) {
        r.input(&p.display().to_string(), t);
    }
    match &parsed {
        ParsedComplex::Rational(c) => {
            let frame = match &frame_text {
                Some(t) => parse_frames(t, c.dims(), parse_rational).map_err(err)?,
                None => CellFrame::Standard,
            };
            torsion_entries(&mut r, c, &frame)?;
        }
        ParsedComplex::RatFunc(_, c) => {
            let frame = match &frame_text {
                Some(t) => parse_frames(t, c.dims(), |s| s.parse::<RatFunc>()).map_err(err)?,
                None => CellFrame::Standard,
            };
            torsion_entries(&mut r, c, &frame)?;
        }
    }
    r.output("field", parsed.kind().name());
    Ok(r)
}

fn torsion_entries<F: Field>(
    r: &mut Report,
    c: &ChainComplex<F>,
    frame: &CellFrame<F>,
) -> CmdResult<()> {
    let h = compute_homology(c);
    let one = DetLineCoord::new(F::one(), "cells");
    let phi = torsion_phi(c, &one, frame, &h).map_err(err)?;
    let ranks = h.ranks();
    let (alpha, beta) = alpha_beta(c.dims(), &ranks);
    r.output("torsion", &phi.value);
    r.output(
        "frame",
        if c.is_acyclic() {
            "acyclic"
        } else {
            "homology"
        },
    );
    r.output("dims", dims_string(c.dims()));
    r.output("homology", dims_string(&ranks));
    r.output("sign.N", sign_n(c.dims(), &ranks));
    r.output("sign.alpha", residues(&alpha));
    r.output("sign.beta", residues(&beta));
    Ok(())
}

fn load_diagram(arg: &str) -> CmdResult<(String, String, KnotDiagram)> {
    let (label, text) = diagram_text(arg)?;
    let d = parse_pd(&text).map_err(|e| format!("{label}: {e}"))?;
    Ok((label, text, d))
}

pub fn knot_conway(arg: &str) -> CmdResult<Report> {
    let (label, text, d) = load_diagram(arg)?;
    let mut r = Report::new("knot conway");
    r.input(&label, &text);
    r.output("conway", conway_from_torsion(&d).map_err(err)?);
    let (tau, eta) = canonical_torsion(&d).map_err(err)?;
    r.output("tau0.canonical", &tau.value);
    r.output("orientation", eta.sign());
    Ok(r)
}

pub fn knot_conway_skein(arg: &str) -> CmdResult<Report> {
    let (label, text, d) = load_diagram(arg)?;
    let mut r = Report::new("knot conway-skein");
    r.input(&label, &text);
    let s = conway_skein(&d).map_err(err)?;
    r.output("conway", &s.conway);
    r.output("skein.nodes", s.nodes);
    r.output("skein.triples", s.triples.len());
    r.output("skein.failures", s.failures());
    Ok(r)
}

pub fn knot_alexander(arg: &str) -> CmdResult<Report> {
    let (label, text, d) = load_diagram(arg)?;
    let mut r = Report::new("knot alexander");
    r.input(&label, &text);
    let (p, _) = alexander_poly(&d).map_err(err)?;
    r.output("alexander", p);
    Ok(r)
}

/// `x` or `x,y` for `x + iy`.
pub fn parse_complex(s: &str) -> CmdResult<ComplexSample> {
    let part = |p: &str| {
        p.trim()
            .parse::<f64>()
            .map_err(|_| format!("bad complex number `{s}`; expected `x` or `x,y`"))
    };
    match s.split_once(',') {
        Some((re, im)) => Ok(ComplexSample::new(part(re)?, part(im)?)),
        None => Ok(ComplexSample::new(part(s)?, 0.0)),
    }
}

fn complex_string(z: ComplexSample) -> String {
    format!("{:.12e},{:.12e}", z.re, z.im)
}

pub fn knot_abs_torsion(arg: &str, at: Option<&str>, field: Option<FieldArg>) -> CmdResult<Report> {
    let (label, text, d) = load_diagram(arg)?;
    let mut r = Report::new("knot abs-torsion");
    r.input(&label, &text);
    match (field.unwrap_or(FieldArg::Rational), at) {
        (FieldArg::Ratfunc, None) => {
            let (tau, _) = canonical_torsion(&d).map_err(err)?;
            r.output("torsion", &tau.value);
        }
        (FieldArg::Rational, Some(a)) => {
            let a = parse_rational(a).map_err(err)?;
            let v = absolute_torsion_at(&d, &a).map_err(err)?;
            r.output("torsion", v);
            r.output("a", a);
        }
        (FieldArg::Complex, Some(a)) => {
            let a = parse_complex(a)?;
            let v = absolute_torsion_at_complex(&d, a).map_err(err)?;
            r.output("torsion", complex_string(v));
            r.output("a", complex_string(a));
        }
        (FieldArg::Ratfunc, Some(_)) => {
            return Err("--field ratfunc gives the symbolic torsion; drop --at".into())
        }
        (FieldArg::Laurent, _) => {
            return Err(
                "the torsion is not a Laurent polynomial; use rational, complex or ratfunc".into(),
            )
        }
        (_, None) => return Err("--at <a> is required".into()),
    }
    Ok(r)
}

pub fn knot_verify(args: &[String]) -> CmdResult<Vec<Report>> {
    let loaded: Vec<_> = args
        .iter()
        .map(|a| load_diagram(a))
        .collect::<CmdResult<_>>()?;
    loaded
        .par_iter()
        .map(|(label, text, d)| {
            let mut r = Report::new("knot verify");
            r.input(label, text);
            let (data, checks) = verify_diagram(label, d).map_err(|e| format!("{label}: {e}"))?;
            r.output("conway.torsion", &data.conway_torsion);
            r.output("conway.skein", &data.skein.conway);
            r.output("alexander", &data.alexander);
            for c in checks {
                r.check(c);
            }
            Ok(r)
        })
        .collect()
}

pub fn cw(file: &Path, at: Option<&str>, field: Option<FieldArg>) -> CmdResult<Report> {
    let text = read(file)?;
    let x = cw_format::parse(&text).map_err(err)?;
    let mut r = Report::new("cw");
    r.input(&file.display().to_string(), &text);
    let base = euler_cw::universal_torsion(&x, EulerStructure::BASE, HomOrientation::Positive);
    let tau = match base {
        Ok(t) => t,
        Err(Error::ZeroTorsion) => {
            r.output("tau0", "0");
            r.output(
                "dims",
                x.cells()
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            );
            return Ok(r);
        }
        Err(e) => return Err(err(e)),
    };
    r.output("tau0", &tau);
    r.output(
        "dims",
        x.cells()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" "),
    );
    r.output(
        "betti",
        x.betti()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" "),
    );
    r.output("semi-characteristic", x.semi_characteristic());
    let (c, eps) = euler_cw::char_class_of(&tau).map_err(err)?;
    r.output("char-class", c);
    r.output("bar-sign", eps);
    let xi = euler_cw::canonical_from_class(c).map_err(err)?;
    r.output("euler.canonical", xi.offset);
    let canonical = euler_cw::universal_torsion(&x, xi, HomOrientation::Positive).map_err(err)?;
    r.output("tau0.canonical", &canonical);
    if let Some(a) = at {
        match field.unwrap_or(FieldArg::Rational) {
            FieldArg::Rational => {
                let a = parse_rational(a).map_err(err)?;
                let bundle = FlatBundle::line(a.clone()).map_err(err)?;
                let t = euler_cw::absolute_torsion(&x, &bundle, HomOrientation::Positive)
                    .map_err(err)?;
                r.output("a", a);
                r.output_headline("torsion", &t.value.value);
                r.output("torsion.frame", &t.value.frame);
            }
            FieldArg::Complex => {
                let a = parse_complex(a)?;
                let v = euler_cw::torsion_at_complex(&x, xi, a, HomOrientation::Positive)
                    .map_err(err)?;
                r.output("a", complex_string(a));
                r.output_headline("torsion", complex_string(v));
            }
            other => {
                return Err(format!(
                    "--at needs --field rational or complex, not {other:?}"
                ))
            }
        }
    }
    Ok(r)
}

pub fn selftest(corrupt_signs: bool) -> Report {
    let opts = SuiteOptions {
        signs: if corrupt_signs {
            SignTable::corrupted()
        } else {
            SignTable::STANDARD
        },
        ..SuiteOptions::default()
    };
    let mut r = Report::new("selftest");
    for c in run_all(&opts) {
        r.check(c);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_arguments() {
        assert_eq!(parse_complex("2").unwrap(), ComplexSample::new(2.0, 0.0));
        assert_eq!(
            parse_complex("0.5, -1").unwrap(),
            ComplexSample::new(0.5, -1.0)
        );
        assert!(parse_complex("1+i").is_err());
        assert_eq!(
            complex_string(ComplexSample::new(-0.5, 0.0)),
            "-5.000000000000e-1,0.000000000000e0"
        );
    }
}

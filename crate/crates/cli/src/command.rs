//! Execution of the non-suite subcommands against a parsed workspace.

use yext::{
    ab4_colim_check, biproduct, classes_equal, describe_factors, ext_group, phi, psi,
    psi_inverse, theta, yoneda_class, Biproduct, ExtFamily, NExtension,
};

use crate::workspace::{CliError, Workspace};

/// Output lines, plus how many reported checks failed (drives the exit code).
pub struct Outcome {
    pub lines: Vec<String>,
    pub failures: usize,
}

impl Outcome {
    fn value(line: String) -> Self {
        Outcome {
            lines: vec![line],
            failures: 0,
        }
    }
}

fn biproduct_of_named(ws: &Workspace, names: &[String]) -> Result<Biproduct, CliError> {
    let mut parts = Vec::with_capacity(names.len());
    for name in names {
        parts.push(ws.module(name)?.clone());
    }
    biproduct(&parts).map_err(CliError::Core)
}

pub fn ext_group_command(
    ws: &Workspace,
    c: &str,
    a: &str,
    degree: usize,
) -> Result<Outcome, CliError> {
    let right = ws.module(c)?;
    let left = ws.module(a)?;
    if degree == 0 {
        return Err(CliError::Usage("extgroup needs degree >= 1".into()));
    }
    let factors = ext_group(right, left, degree);
    Ok(Outcome::value(describe_factors(&factors)))
}

pub fn class_command(ws: &Workspace, name: &str) -> Result<Outcome, CliError> {
    let ext = ws.extension(name)?;
    Ok(Outcome::value(yoneda_class(&ext).to_string()))
}

pub fn sum_command(ws: &Workspace, e1: &str, e2: &str) -> Result<Outcome, CliError> {
    let x1 = ws.extension(e1)?;
    let x2 = ws.extension(e2)?;
    if x1.left_end() != x2.left_end() || x1.right_end() != x2.right_end() {
        return Err(CliError::Usage(format!(
            "sum: '{e1}' and '{e2}' do not share their ends"
        )));
    }
    if x1.degree() != x2.degree() {
        return Err(CliError::Usage(format!(
            "sum: '{e1}' has degree {}, '{e2}' has degree {}",
            x1.degree(),
            x2.degree()
        )));
    }
    Ok(Outcome::value(yoneda_class(&x1.sum(&x2)).to_string()))
}

pub fn act_left_command(ws: &Workspace, alpha: &str, e: &str) -> Result<Outcome, CliError> {
    let map = ws.morphism(alpha)?;
    let ext = ws.extension(e)?;
    if map.source() != ext.left_end() {
        return Err(CliError::Usage(format!(
            "act-left: '{alpha}' does not start at the left end of '{e}'"
        )));
    }
    let (acted, _) = ext.act_left(map);
    Ok(Outcome::value(yoneda_class(&acted).to_string()))
}

pub fn act_right_command(ws: &Workspace, e: &str, gamma: &str) -> Result<Outcome, CliError> {
    let map = ws.morphism(gamma)?;
    let ext = ws.extension(e)?;
    if map.target() != ext.right_end() {
        return Err(CliError::Usage(format!(
            "act-right: '{gamma}' does not land in the right end of '{e}'"
        )));
    }
    let (acted, _) = ext.act_right(map);
    Ok(Outcome::value(yoneda_class(&acted).to_string()))
}

pub fn compose_command(ws: &Workspace, e1: &str, e2: &str) -> Result<Outcome, CliError> {
    let x1 = ws.extension(e1)?;
    let x2 = ws.extension(e2)?;
    if x1.right_end() != x2.left_end() {
        return Err(CliError::Usage(format!(
            "compose: right end of '{e1}' differs from left end of '{e2}'"
        )));
    }
    let composed = x1.compose_with(&x2).map_err(CliError::Core)?;
    Ok(Outcome::value(format!(
        "degree {} class {}",
        composed.degree(),
        yoneda_class(&composed)
    )))
}

pub fn psi_command(ws: &Workspace, e: &str, components: &[String]) -> Result<Outcome, CliError> {
    let ext = ws.extension(e)?;
    let sum = biproduct_of_named(ws, components)?;
    if ext.right_end() != &sum.object {
        return Err(CliError::Usage(format!(
            "psi: right end of '{e}' is not the biproduct of {}",
            components.join(", ")
        )));
    }
    let parts = psi(&ext, &sum).map_err(CliError::Core)?;
    let lines = parts
        .iter()
        .zip(components)
        .map(|(part, name)| format!("component {name}: {}", yoneda_class(part)))
        .collect();
    Ok(Outcome { lines, failures: 0 })
}

pub fn theta_command(ws: &Workspace, components: &[String]) -> Result<Outcome, CliError> {
    let mut family = Vec::with_capacity(components.len());
    for name in components {
        family.push(NExtension::from_ses(ws.sequence(name)?.clone()));
    }
    let family = ExtFamily::new(family).map_err(CliError::Core)?;
    let (glued, _) = theta(&family).map_err(CliError::Core)?;
    let mut lines = vec![
        format!("middle {}", glued.middle()),
        format!("class {}", yoneda_class_of_ses(&glued)),
    ];
    let sum = biproduct(
        &family
            .components()
            .iter()
            .map(|c| c.right_end().clone())
            .collect::<Vec<_>>(),
    )
    .map_err(CliError::Core)?;
    let parts = psi(&NExtension::from_ses(glued), &sum).map_err(CliError::Core)?;
    let mut failures = 0;
    for ((part, original), name) in parts.iter().zip(family.components()).zip(components) {
        let ok = part.as_ses().equivalent(original.as_ses());
        if !ok {
            failures += 1;
        }
        lines.push(format!(
            "component {name} recovered: {}",
            if ok { "PASS" } else { "FAIL" }
        ));
    }
    Ok(Outcome { lines, failures })
}

fn yoneda_class_of_ses(seq: &yext::ShortExactSeq) -> yext::ExtClass {
    yoneda_class(&NExtension::from_ses(seq.clone()))
}

pub fn psi_inverse_command(
    ws: &Workspace,
    degree: usize,
    components: &[String],
) -> Result<Outcome, CliError> {
    let mut family = Vec::with_capacity(components.len());
    for name in components {
        let ext = ws.extension(name)?;
        if ext.degree() != degree {
            return Err(CliError::Usage(format!(
                "psi-inv: '{name}' has degree {}, expected {degree}",
                ext.degree()
            )));
        }
        family.push(ext);
    }
    let family = ExtFamily::new(family).map_err(CliError::Core)?;
    let glued = psi_inverse(&family).map_err(CliError::Core)?;
    let mut lines = vec![format!("class {}", yoneda_class(&glued))];
    let sum = biproduct(
        &family
            .components()
            .iter()
            .map(|c| c.right_end().clone())
            .collect::<Vec<_>>(),
    )
    .map_err(CliError::Core)?;
    let parts = psi(&glued, &sum).map_err(CliError::Core)?;
    let mut failures = 0;
    for ((part, original), name) in parts.iter().zip(family.components()).zip(components) {
        let ok = classes_equal(part, original);
        if !ok {
            failures += 1;
        }
        lines.push(format!(
            "component {name} recovered: {}",
            if ok { "PASS" } else { "FAIL" }
        ));
    }
    Ok(Outcome { lines, failures })
}

pub fn phi_command(ws: &Workspace, e: &str, components: &[String]) -> Result<Outcome, CliError> {
    let ext = ws.extension(e)?;
    let prod = biproduct_of_named(ws, components)?;
    if ext.left_end() != &prod.object {
        return Err(CliError::Usage(format!(
            "phi: left end of '{e}' is not the product of {}",
            components.join(", ")
        )));
    }
    let parts = phi(&ext, &prod).map_err(CliError::Core)?;
    let lines = parts
        .iter()
        .zip(components)
        .map(|(part, name)| format!("component {name}: {}", yoneda_class(part)))
        .collect();
    Ok(Outcome { lines, failures: 0 })
}

pub fn ab4_command(ws: &Workspace, morphisms: &[String]) -> Result<Outcome, CliError> {
    let mut family = Vec::with_capacity(morphisms.len());
    for name in morphisms {
        family.push(ws.morphism(name)?.clone());
    }
    let report = ab4_colim_check(&family).map_err(CliError::Core)?;
    let mut failures = 0;
    let lines = report
        .checks
        .iter()
        .map(|(name, ok)| {
            if !ok {
                failures += 1;
            }
            format!("{name}: {}", if *ok { "PASS" } else { "FAIL" })
        })
        .collect();
    Ok(Outcome { lines, failures })
}

//! Loading workspace files and selecting the gluing to work on.

use crate::CliError;
use fibergerm_core::gluing::fiber_product_presentation;
use fibergerm_core::{self_glue, Error, GluedGerm, GluingDatum, Workspace};
use std::path::PathBuf;

/// Parses the files as one workspace, so later files may refer to names
/// from earlier ones.
pub fn load(files: &[PathBuf]) -> Result<Workspace, CliError> {
    let mut text = String::new();
    let mut starts = Vec::new();
    for f in files {
        let body = std::fs::read_to_string(f).map_err(|e| CliError::Usage(format!("{}: {e}", f.display())))?;
        starts.push((text.lines().count(), f));
        text.push_str(&body);
        if !text.ends_with('\n') {
            text.push('\n');
        }
    }
    Workspace::parse(&text).map_err(|e| match e {
        Error::Parse { line, message } => {
            let (offset, file) = starts
                .iter()
                .rev()
                .find(|(start, _)| *start < line)
                .copied()
                .expect("parse errors point into some file");
            CliError::Usage(format!("{}:{}: {message}", file.display(), line - offset))
        }
        other => other.into(),
    })
}

#[derive(clap::Args, Debug, Clone)]
pub struct GluingArgs {
    /// Workspace files.
    pub files: Vec<PathBuf>,
    /// Surjection from the first factor onto the gluing subspace.
    #[arg(long, conflicts_with = "self_glue")]
    pub alpha: Option<String>,
    /// Surjection from the second factor; defaults to `--alpha`.
    #[arg(long, requires = "alpha")]
    pub beta: Option<String>,
    /// Glue the ambient germ of this subspace to itself along it.
    #[arg(long = "self-glue", value_name = "SUBSPACE")]
    pub self_glue: Option<String>,
}

impl GluingArgs {
    pub fn build(&self) -> Result<GluedGerm, CliError> {
        if self.files.is_empty() {
            return Err(CliError::Usage("no workspace files given".into()));
        }
        let ws = load(&self.files)?;
        match (&self.alpha, &self.self_glue) {
            (Some(a), None) => {
                let alpha = ws.map(a)?;
                let beta = match &self.beta {
                    Some(b) => ws.map(b)?,
                    None => alpha.clone(),
                };
                Ok(fiber_product_presentation(&GluingDatum::new(alpha, beta)?)?)
            }
            (None, Some(s)) => Ok(self_glue(&*ws.subspace(s)?)?),
            _ => Err(CliError::Usage("give either --alpha or --self-glue".into())),
        }
    }
}

use std::path::PathBuf;

use posetlab_core::{chain_poset, product, Poset, PosetError};
use thiserror::Error;

use crate::expr::Expr;

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Load { path: PathBuf, source: PosetError },
    #[error(transparent)]
    Poset(#[from] PosetError),
}

/// Builds the poset bottom-up.
pub fn evaluate(e: &Expr) -> Result<Poset, EvalError> {
    match e {
        Expr::Family(spec) => Ok(spec.build()?),
        Expr::Load(path) => {
            let path = PathBuf::from(path);
            let text = std::fs::read_to_string(&path).map_err(|source| EvalError::Io { path: path.clone(), source })?;
            Poset::from_json(&text).map_err(|source| EvalError::Load { path, source })
        }
        Expr::Chain(child, k) => Ok(chain_poset(&evaluate(child)?, *k)?.into_poset()),
        Expr::Prod(l, r) => Ok(product(&evaluate(l)?, &evaluate(r)?)),
    }
}

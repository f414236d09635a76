//! Resource caps shared by the library entry points and the command line.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// chord diagram degree for enumeration and quotients
    pub max_degree: usize,
    /// double points resolved by skein evaluation (2^n terms)
    pub max_double_points: usize,
    /// crossings accepted by the recursive skein evaluation
    pub max_skein_crossings: usize,
    /// `n` for the certificate families
    pub max_family_n: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self { max_degree: 6, max_double_points: 6, max_skein_crossings: 16, max_family_n: 2 }
    }
}

impl Caps {
    pub fn check(what: &'static str, value: usize, cap: usize) -> Result<()> {
        if value > cap {
            Err(Error::ResourceCap { what, value, cap })
        } else {
            Ok(())
        }
    }
}

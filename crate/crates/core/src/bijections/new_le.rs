//! NEW tableaux and Le tableaux of the same shape.

use crate::bijections::le_ew::{chain_fill, Via};
use crate::bijections::paths::trace;
use crate::bijections::phi::{phi_le, phi_le_inverse};
use crate::bijections::psi::{psi, psi_inverse};
use crate::error::Result;
use crate::shape::Family;
use crate::tableau::{require_family, Tableau};
use crate::transform::{cyclic_down_shift, cyclic_up_shift, desexc, desexc_inverse};

/// NEW to Le through permutations; the shape is kept.
pub fn new_le(t: &Tableau) -> Result<Tableau> {
    require_family(t, Family::New)?;
    phi_le_inverse(&cyclic_down_shift(&desexc(&psi(t)?)))
}

/// Le to NEW through permutations.
pub fn new_le_inverse(l: &Tableau) -> Result<Tableau> {
    let p = phi_le(l)?;
    psi_inverse(&desexc_inverse(&cyclic_up_shift(&p)), Family::New)
}

/// Le to NEW by reverse paths on the Le tableau itself.
///
/// The labels at the far ends of rows and columns are moved up by one
/// (`n` becoming 1) and the near-end labels are left alone. Filling then
/// proceeds as for EW targets but without a pre-filled top row.
pub fn le_to_new_direct(l: &Tableau) -> Result<Tableau> {
    require_family(l, Family::Le)?;
    let labels = l.labeling();
    let n = labels.max_label();
    let (t, _) = chain_fill(l.shape(), Family::New, n, |i| {
        let e = if i == 1 { n } else { i - 1 };
        let line = labels.line(e).expect("labels 1..=n are on the border");
        let path = trace(l.shape(), line, false, |r, c, _| l.get(r, c));
        Ok(labels.label(path.exit))
    })?;
    Ok(t)
}

pub fn new_le_inverse_via(l: &Tableau, via: Via) -> Result<Tableau> {
    match via {
        Via::Composed => new_le_inverse(l),
        Via::Direct => le_to_new_direct(l),
    }
}

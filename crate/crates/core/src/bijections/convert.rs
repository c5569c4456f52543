//! Conversion between any two tableau families.
//!
//! EW and NEW are related by reflection and complement; every other pair
//! goes through Le tableaux.

use std::fmt;
use std::str::FromStr;

use crate::bijections::le_ew::{ew_to_le_via, le_to_ew_via, Via};
use crate::bijections::new_le::{new_le, new_le_inverse_via};
use crate::bijections::psi::psi;
use crate::bijections::tree::{
    le_to_tree, tree_from_perm, tree_to_ew_m, tree_to_ew_via_le, tree_to_ew_via_le_composed,
    tree_to_le,
};
use crate::error::{Error, Result};
use crate::shape::Family;
use crate::tableau::{reflect_complement, reflect_complement_inverse, Tableau};

/// Which construction to use where several exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Route {
    /// Through permutations (or, for trees, through Le tableaux).
    #[default]
    Composed,
    /// Path-following on the tableau itself.
    Direct,
    /// Trees and EW tableaux through spanning-tree reading.
    Spanning,
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "composed" => Ok(Route::Composed),
            "direct" => Ok(Route::Direct),
            "spanning" => Ok(Route::Spanning),
            other => Err(Error::Unsupported(format!("route {other:?}"))),
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Composed => "composed",
            Route::Direct => "direct",
            Route::Spanning => "spanning",
        })
    }
}

fn via(route: Route, from: Family, to: Family) -> Result<Via> {
    match route {
        Route::Composed => Ok(Via::Composed),
        Route::Direct => Ok(Via::Direct),
        Route::Spanning => Err(unsupported(route, from, to)),
    }
}

fn unsupported(route: Route, from: Family, to: Family) -> Error {
    Error::Unsupported(format!("{route} {from} to {to}"))
}

pub fn convert(t: &Tableau, to: Family, route: Route) -> Result<Tableau> {
    use Family::*;
    let from = t.family();
    match (from, to) {
        _ if from == to => Ok(t.clone()),
        (Ew, New) => reflect_complement(t),
        (New, Ew) => reflect_complement_inverse(t),
        (Ew, Le) => ew_to_le_via(t, via(route, from, to)?),
        (Le, Ew) => le_to_ew_via(t, via(route, from, to)?),
        (New, Le) => match route {
            Route::Composed => new_le(t),
            _ => Err(unsupported(route, from, to)),
        },
        (Le, New) => new_le_inverse_via(t, via(route, from, to)?),
        (Tree, Le) => tree_to_le(t),
        (Le, Tree) => le_to_tree(t),
        (Tree, Ew) => match route {
            Route::Composed => tree_to_ew_via_le_composed(t),
            Route::Direct => tree_to_ew_via_le(t).map(|(e, _)| e),
            Route::Spanning => tree_to_ew_m(t),
        },
        (Ew, Tree) => match route {
            Route::Spanning => tree_from_perm(&psi(t)?),
            _ => le_to_tree(&ew_to_le_via(t, via(route, from, to)?)?),
        },
        (New, Tree) => le_to_tree(&convert(t, Le, route)?),
        (Tree, New) => convert(&tree_to_le(t)?, New, route),
        _ => unreachable!("all family pairs are covered"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_size;

    #[test]
    fn round_trips_between_all_families() {
        for n in 1..=5 {
            for from in Family::ALL {
                for t in enumerate_size(n, from) {
                    for to in Family::ALL {
                        for route in [Route::Composed, Route::Direct, Route::Spanning] {
                            let Ok(u) = convert(&t, to, route) else {
                                continue;
                            };
                            assert_eq!(u.family(), to);
                            // Missing reverse routes fall back to the composed one.
                            let back = convert(&u, from, route)
                                .or_else(|_| convert(&u, from, Route::Composed))
                                .unwrap();
                            assert_eq!(back, t, "{from} -> {to} via {route}");
                        }
                    }
                }
            }
        }
    }

    use Family::*;

    #[test]
    fn unsupported_routes() {
        let t = Tableau::from_strs(New, &["1"]).unwrap();
        assert!(matches!(
            convert(&t, Le, Route::Direct),
            Err(Error::Unsupported(_))
        ));
        assert!(convert(&t, Ew, Route::Spanning).is_ok());
        let e = Tableau::from_strs(Ew, &["1"]).unwrap();
        assert!(matches!(
            convert(&e, Le, Route::Spanning),
            Err(Error::Unsupported(_))
        ));
    }
}

//! Springer Schubert cells of two-row Springer fibers: matchings, cell
//! matrices, arc cutting and closure certification, in exact arithmetic.

pub mod cellgeom;
pub mod closure;
pub mod cutting;
pub mod exactalg;
pub mod matchcore;
pub mod oracle;

pub use cellgeom::{build_template, instantiate, CellTemplate, ParamVector};
pub use cutting::{labeled_cut, Label, LabeledPiece};
pub use exactalg::{FlagMatrix, Fp, Matrix, Poly, Q};
pub use matchcore::{Arc, BTWord, JordanType, Letter, Matching};

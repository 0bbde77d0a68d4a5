//! The subcommands, as functions from inputs to output text.

use std::fs;
use std::path::Path;

use tropical_complex::complex::{act_on_type, enumerate_with};
use tropical_complex::{Arrangement, PermanentStructure};

use crate::format::{parse_partition, parse_point, parse_type, ArrangementFile, ComplexReport};
use crate::render::{render_svg, Viewport};
use crate::CliError;

pub fn load_arrangement(path: &Path) -> Result<Arrangement, CliError> {
    let text = fs::read_to_string(path)?;
    ArrangementFile::from_json(&text)?.to_arrangement()
}

/// Type of a point, in column form, with a trailing newline.
pub fn type_of_point(arr: &Arrangement, point: &str) -> Result<String, CliError> {
    let x = parse_point(point)?;
    Ok(format!("{}\n", arr.type_of(&x)?))
}

/// The complex as a JSON report. With `check_geometric` every cell is also
/// realized by a point, and any disagreement is an error.
pub fn enumerate(arr: &Arrangement, check_geometric: bool, cap: usize) -> Result<String, CliError> {
    let size = arr.rows() * arr.cols();
    if size > cap {
        return Err(tropical_complex::Error::CapExceeded {
            what: "candidate matrix",
            size,
            cap,
        }
        .into());
    }
    let structure = PermanentStructure::full(arr.clone())?;
    let poset = enumerate_with(&structure)?;
    if check_geometric {
        for cell in poset.cells() {
            if !arr.is_realized_type(cell.type_matrix())? {
                return Err(CliError::Disagreement(cell.type_matrix().to_string()));
            }
        }
    }
    Ok(ComplexReport::from_poset(&poset).to_json())
}

/// `T ∘ P`, where `T` must be a type of the arrangement.
pub fn act(arr: &Arrangement, ty: &str, partition: &str) -> Result<String, CliError> {
    let t = parse_type(ty, arr.rows())?;
    let p = parse_partition(partition, arr.rows())?;
    let structure = PermanentStructure::full(arr.clone())?;
    if !structure.is_type(&t)? {
        return Err(CliError::NotAType(t.to_string()));
    }
    let cell = structure.cell(&t)?;
    let moved = act_on_type(&structure, &cell, &p)?;
    Ok(format!("{}\n", moved.type_matrix()))
}

pub fn render(arr: &Arrangement, viewport: Option<&str>) -> Result<String, CliError> {
    let vp = viewport.map(str::parse::<Viewport>).transpose()?;
    render_svg(arr, vp)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> Arrangement {
        Arrangement::from_integers(&[&[-8, 10, 15, 0], &[10, 10, 5, -10], &[0, 0, 0, 0]]).unwrap()
    }

    #[test]
    fn type_of_origin() {
        assert_eq!(
            type_of_point(&example(), "0,0,0").unwrap(),
            "({2},{1,2},{1},{1,3})\n"
        );
        assert_eq!(
            type_of_point(&example(), "5,5,5").unwrap(),
            "({2},{1,2},{1},{1,3})\n"
        );
        assert!(matches!(
            type_of_point(&example(), "0,0"),
            Err(CliError::Parse(_))
        ));
    }

    #[test]
    fn enumerate_reports_counts() {
        let json = enumerate(&example(), true, 24).unwrap();
        let report: ComplexReport = serde_json::from_str(&json).unwrap();
        assert_eq!(report.cells.len(), 37);
        assert_eq!(report.summary["0"], 7);
        assert_eq!(report.summary["1"], 18);
        assert_eq!(report.summary["2"], 12);
        assert!(matches!(
            enumerate(&example(), false, 11),
            Err(CliError::CapExceeded(_))
        ));
    }

    #[test]
    fn act_on_h() {
        let out = act(&example(), "({2},{1,2},{1},{1,3})", "({3}|{2}|{1})").unwrap();
        assert_eq!(out, "({2},{1},{1},{1})\n");
        let err = act(&example(), "({},{1},{1},{1})", "({1,2,3})").unwrap_err();
        assert_eq!(err.exit_code(), 4);
    }
}

//! JSON documents: one table per file, and the catalog export.

use serde::{Deserialize, Serialize};

use crate::algebra::{invariant_profile, InvariantProfile, StructureTable};
use crate::catalog::{metadata, sampled_labels, Catalog, Metadata};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{FieldMode, Scalar};

pub const FORMAT: u32 = 1;

/// A multiplication table as stored on disk. `table[i][j]` holds the
/// coordinates of `eᵢeⱼ` as scalar strings.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TableDocument {
    pub format: u32,
    pub dim: usize,
    pub field: FieldMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub table: Vec<Vec<Vec<String>>>,
}

impl TableDocument {
    pub fn from_table(t: &StructureTable) -> TableDocument {
        let table = t.nested().iter().map(|row| row.iter().map(|v| v.iter().map(|x| x.to_string()).collect()).collect()).collect();
        TableDocument { format: FORMAT, dim: t.dim(), field: t.mode(), basis: None, table }
    }

    pub fn with_basis(mut self, names: &[&str]) -> TableDocument {
        self.basis = Some(names.iter().map(|s| s.to_string()).collect());
        self
    }

    pub fn parse(text: &str) -> Result<TableDocument> {
        let doc: TableDocument = serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
        doc.check_format()?;
        Ok(doc)
    }

    fn check_format(&self) -> Result<()> {
        if self.format != FORMAT {
            return Err(Error::Document(format!("unsupported format {}", self.format)));
        }
        Ok(())
    }

    pub fn to_table(&self) -> Result<StructureTable> {
        self.check_format()?;
        let d = self.dim;
        if let Some(names) = &self.basis {
            if names.len() != d {
                return Err(Error::Document(format!("basis has {} names for dimension {d}", names.len())));
            }
        }
        if self.table.len() != d {
            return Err(Error::Document(format!("table has {} rows for dimension {d}", self.table.len())));
        }
        let mut nested = Vec::with_capacity(d);
        for (i, row) in self.table.iter().enumerate() {
            if row.len() != d {
                return Err(Error::Document(format!("table[{i}] has {} entries, expected {d}", row.len())));
            }
            let mut out_row = Vec::with_capacity(d);
            for (j, v) in row.iter().enumerate() {
                if v.len() != d {
                    return Err(Error::Document(format!("table[{i}][{j}] has {} coordinates, expected {d}", v.len())));
                }
                let coords = v
                    .iter()
                    .enumerate()
                    .map(|(s, text)| {
                        text.parse::<Scalar>().map_err(|e| Error::Document(format!("table[{i}][{j}][{s}]: {e}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                out_row.push(coords);
            }
            nested.push(out_row);
        }
        StructureTable::from_nested(self.field, nested)
    }

    /// Basis vector names, `e, f, g` unless the document gives its own.
    pub fn names(&self) -> Vec<String> {
        match &self.basis {
            Some(b) => b.clone(),
            None => ["e", "f", "g"].iter().take(self.dim).map(|s| s.to_string()).collect(),
        }
    }

    /// Pretty JSON with one table row per line.
    pub fn to_json(&self) -> String {
        let mut out = format!("{{\n  \"format\": {},\n  \"dim\": {},\n  \"field\": {},\n", self.format, self.dim, compact(&self.field));
        if let Some(b) = &self.basis {
            out += &format!("  \"basis\": {},\n", compact(b));
        }
        let rows: Vec<String> = self.table.iter().map(|r| format!("    {}", compact(r))).collect();
        out += &format!("  \"table\": [\n{}\n  ]\n}}\n", rows.join(",\n"));
        out
    }
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct ExportEntry {
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<String>,
    pub document: TableDocument,
    pub profile: InvariantProfile,
    pub metadata: Metadata,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct CatalogExport {
    pub format: u32,
    pub entries: Vec<ExportEntry>,
}

impl CatalogExport {
    /// Every fixed label and sampled family member, real entries first,
    /// by dimension. Profiles are computed from the stored tables.
    pub fn build(catalog: &Catalog) -> Result<CatalogExport> {
        let mut entries = Vec::new();
        for mode in [FieldMode::Real, FieldMode::Complex] {
            for dim in 1..=3 {
                for label in sampled_labels(mode, dim) {
                    let t = catalog.table(&label, mode)?;
                    entries.push(ExportEntry {
                        label: label.family.name().to_string(),
                        k: label.param.as_ref().map(|p| p.k.to_string()),
                        document: TableDocument::from_table(&t),
                        profile: invariant_profile(&t)?,
                        metadata: metadata(&label)?,
                    });
                }
            }
        }
        Ok(CatalogExport { format: FORMAT, entries })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("export serializes") + "\n"
    }

    pub fn parse(text: &str) -> Result<CatalogExport> {
        let doc: CatalogExport = serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
        if doc.format != FORMAT {
            return Err(Error::Document(format!("unsupported format {}", doc.format)));
        }
        Ok(doc)
    }
}

/// Reads either a single table document or a catalog export. Each table
/// comes with a name: the entry label, or `None` for a lone document.
pub fn read_documents(text: &str) -> Result<Vec<(Option<String>, TableDocument)>> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
    if value.get("entries").is_some() {
        let export = CatalogExport::parse(text)?;
        Ok(export
            .entries
            .into_iter()
            .map(|e| {
                let name = match &e.k {
                    Some(k) => format!("{} ({}, k = {k})", e.label, e.document.field),
                    None => format!("{} ({})", e.label, e.document.field),
                };
                (Some(name), e.document)
            })
            .collect())
    } else {
        Ok(vec![(None, TableDocument::parse(text)?)])
    }
}

fn compact<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("document serializes")
}

/// Matrix entries as scalar strings, row by row.
pub fn matrix_strings<F: crate::scalar::Field + ToString>(m: &Matrix<F>) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m[(i, j)].to_string()).collect()).collect()
}

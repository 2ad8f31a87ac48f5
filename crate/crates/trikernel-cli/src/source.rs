//! Resolving command-line family references.
//!
//! A family is either a catalog name or a JSON spec file. `--family` /
//! `--spec` make the choice explicit; the `--from` / `--to` arguments
//! of `change` and `cross` accept a catalog name first, falling back to
//! a file path when one exists on disk.

use std::path::Path;

use trikernel::catalog::{self, CatalogEntry};
use trikernel::specfile::{load_spec_file, SpecFile};
use trikernel::{Error, LambdaRecursiveSpec, TriangularKernel};

use crate::CliError;

#[derive(Debug)]
pub enum Source {
    Catalog(CatalogEntry),
    File { label: String, file: SpecFile },
}

impl Source {
    pub fn from_catalog(name: &str) -> Result<Source, CliError> {
        Ok(Source::Catalog(catalog::get(name)?))
    }

    pub fn from_file(path: &Path) -> Result<Source, CliError> {
        let src = std::fs::read_to_string(path)
            .map_err(|e| CliError::Domain(format!("cannot read {}: {e}", path.display())))?;
        let file = load_spec_file(&src)?;
        let label = file
            .name()
            .map(str::to_owned)
            .unwrap_or_else(|| path.display().to_string());
        Ok(Source::File { label, file })
    }

    /// Catalog name first; an existing file path second.
    pub fn from_name_or_path(text: &str) -> Result<Source, CliError> {
        match Self::from_catalog(text) {
            Ok(source) => Ok(source),
            Err(unknown) => {
                if Path::new(text).is_file() {
                    Self::from_file(Path::new(text))
                } else {
                    Err(unknown)
                }
            }
        }
    }

    pub fn label(&self) -> String {
        match self {
            Source::Catalog(entry) => entry.name.to_owned(),
            Source::File { label, .. } => label.clone(),
        }
    }

    /// The lambda-recursive spec, when this source has one.
    pub fn recursive_spec(&self) -> Result<&LambdaRecursiveSpec, Error> {
        match self {
            Source::Catalog(entry) => Ok(&entry.spec),
            Source::File {
                file: SpecFile::Recursive(spec),
                ..
            } => Ok(spec),
            Source::File {
                file: SpecFile::Table { .. },
                ..
            } => Err(Error::NotLambdaRecursive),
        }
    }

    pub fn is_recursive(&self) -> bool {
        !matches!(
            self,
            Source::File {
                file: SpecFile::Table { .. },
                ..
            }
        )
    }

    /// Direct kernel with rows `0..=n_max`. Explicit tables carry a
    /// fixed row count; asking beyond it is an error.
    pub fn kernel(&self, n_max: i64) -> Result<TriangularKernel, Error> {
        match self {
            Source::Catalog(entry) => trikernel::kernel::build_direct_kernel(&entry.spec, n_max),
            Source::File {
                file: SpecFile::Recursive(spec),
                ..
            } => trikernel::kernel::build_direct_kernel(spec, n_max),
            Source::File {
                file: SpecFile::Table { kernel, .. },
                ..
            } => {
                if n_max > kernel.n_max() {
                    Err(Error::RowNotBuilt {
                        n: n_max,
                        n_max: kernel.n_max(),
                    })
                } else {
                    Ok(kernel.clone())
                }
            }
        }
    }
}

//! On-disk catalog cache.
//!
//! One text file per catalog type:
//!
//! ```text
//! # hgo-catalog v1 directed=0 kind=g n=4 vc=1 ec=1 conn=0 count=11
//! 0,0,0,0,0,0,0,0,0,0
//! 0,0,0,0,0,0,0,0,1,0
//! ...
//! ```
//!
//! Files are written to a temporary sibling and renamed into place, so a
//! reader never sees a partial file.

use std::env;
use std::fs;
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use crate::enumerate::{Catalog, CatalogKind, CatalogType};
use crate::error::{Error, Result};
use crate::graph::{key_len, CanonicalKey};

pub const FORMAT_VERSION: &str = "v1";
pub const CACHE_DIR_ENV: &str = "HGO_CACHE_DIR";

/// `{u|d}_{g|o}_n{n}_v{vc}_e{ec}_{all|conn}.cat`
pub fn file_name(ty: &CatalogType) -> String {
    format!(
        "{}_{}_n{}_v{}_e{}_{}.cat",
        if ty.directed { 'd' } else { 'u' },
        kind_tag(ty.kind),
        ty.order,
        ty.vertex_colors,
        ty.edge_colors,
        if ty.connected_only { "conn" } else { "all" }
    )
}

fn kind_tag(kind: CatalogKind) -> char {
    match kind {
        CatalogKind::Graphs => 'g',
        CatalogKind::Orbits => 'o',
    }
}

pub fn header_line(ty: &CatalogType, count: usize) -> String {
    format!(
        "# hgo-catalog {FORMAT_VERSION} directed={} kind={} n={} vc={} ec={} conn={} count={count}",
        ty.directed as u8,
        kind_tag(ty.kind),
        ty.order,
        ty.vertex_colors,
        ty.edge_colors,
        ty.connected_only as u8,
    )
}

/// Writes `catalog` in the cache file format.
pub fn write_catalog<W: Write>(catalog: &Catalog, mut out: W) -> io::Result<()> {
    writeln!(out, "{}", header_line(&catalog.catalog_type(), catalog.len()))?;
    for key in catalog.keys() {
        writeln!(out, "{key}")?;
    }
    out.flush()
}

pub fn catalog_bytes(catalog: &Catalog) -> Vec<u8> {
    let mut buf = Vec::new();
    write_catalog(catalog, &mut buf).expect("writing to memory");
    buf
}

fn parse_header(line: &str) -> std::result::Result<(CatalogType, usize), String> {
    let mut tokens = line.split_whitespace();
    if tokens.next() != Some("#") || tokens.next() != Some("hgo-catalog") {
        return Err("missing hgo-catalog header".into());
    }
    match tokens.next() {
        Some(FORMAT_VERSION) => {}
        Some(v) => return Err(format!("unsupported format version {v}")),
        None => return Err("missing format version".into()),
    }
    let mut fields = Vec::new();
    for name in ["directed", "kind", "n", "vc", "ec", "conn", "count"] {
        let tok = tokens.next().ok_or_else(|| format!("missing header field {name}"))?;
        let value = tok
            .strip_prefix(name)
            .and_then(|t| t.strip_prefix('='))
            .ok_or_else(|| format!("expected {name}=..., found {tok}"))?;
        fields.push(value);
    }
    if let Some(extra) = tokens.next() {
        return Err(format!("unexpected header token {extra}"));
    }
    let flag = |s: &str, name: &str| match s {
        "0" => Ok(false),
        "1" => Ok(true),
        _ => Err(format!("bad {name} flag {s}")),
    };
    let num = |s: &str, name: &str| s.parse::<usize>().map_err(|_| format!("bad {name} value {s}"));
    let color = |s: &str, name: &str| s.parse::<u8>().map_err(|_| format!("bad {name} value {s}"));
    let kind = match fields[1] {
        "g" => CatalogKind::Graphs,
        "o" => CatalogKind::Orbits,
        k => return Err(format!("bad kind {k}")),
    };
    let ty = CatalogType {
        kind,
        directed: flag(fields[0], "directed")?,
        order: num(fields[2], "n")?,
        vertex_colors: color(fields[3], "vc")?,
        edge_colors: color(fields[4], "ec")?,
        connected_only: flag(fields[5], "conn")?,
    };
    Ok((ty, num(fields[6], "count")?))
}

/// Parses a catalog file, rejecting anything that is not byte-for-byte what
/// [`write_catalog`] produces for some catalog.
pub fn read_catalog<R: BufRead>(input: R, path: &Path) -> Result<Catalog> {
    let corrupt = |reason: String| Error::CorruptCatalog {
        path: path.to_path_buf(),
        reason,
    };
    let mut lines = input.lines();
    let header = lines.next().ok_or_else(|| corrupt("empty file".into()))??;
    let (ty, count) = parse_header(&header).map_err(corrupt)?;
    let width = key_len(ty.order, ty.directed);
    let mut keys: Vec<CanonicalKey> = Vec::with_capacity(count);
    for (i, line) in lines.enumerate() {
        let line = line?;
        let values = line
            .split(',')
            .map(|t| t.parse::<u8>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| corrupt(format!("malformed key on line {}", i + 2)))?;
        if values.len() != width {
            return Err(corrupt(format!(
                "key on line {} has {} entries, expected {width}",
                i + 2,
                values.len()
            )));
        }
        let key = CanonicalKey::new(values);
        if keys.last().is_some_and(|prev| *prev >= key) {
            return Err(corrupt(format!("keys not strictly increasing at line {}", i + 2)));
        }
        keys.push(key);
    }
    if keys.len() != count {
        return Err(corrupt(format!("header count {count} but {} keys", keys.len())));
    }
    Ok(Catalog::from_sorted(ty, keys))
}

/// A directory of catalog files.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogStore {
    dir: PathBuf,
}

impl CatalogStore {
    /// Opens an existing directory.
    pub fn open(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        if !dir.is_dir() {
            return Err(Error::CacheDirMissing(dir));
        }
        Ok(CatalogStore { dir })
    }

    /// Opens `dir`, creating it first if needed.
    pub fn create(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(CatalogStore { dir })
    }

    /// Cache directory: explicit choice, then `$HGO_CACHE_DIR`, then the
    /// platform cache directory.
    pub fn resolve_dir(explicit: Option<&Path>) -> PathBuf {
        if let Some(dir) = explicit {
            return dir.to_path_buf();
        }
        if let Some(dir) = env::var_os(CACHE_DIR_ENV).filter(|d| !d.is_empty()) {
            return PathBuf::from(dir);
        }
        dirs::cache_dir()
            .unwrap_or_else(env::temp_dir)
            .join("hgo")
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, ty: &CatalogType) -> PathBuf {
        self.dir.join(file_name(ty))
    }

    /// Atomically writes `catalog`; a no-op when an identical file exists.
    pub fn store(&self, catalog: &Catalog) -> Result<PathBuf> {
        if !self.dir.is_dir() {
            return Err(Error::CacheDirMissing(self.dir.clone()));
        }
        let path = self.path_for(&catalog.catalog_type());
        let bytes = catalog_bytes(catalog);
        if fs::read(&path).is_ok_and(|existing| existing == bytes) {
            return Ok(path);
        }
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(&bytes)?;
        tmp.as_file().sync_all()?;
        tmp.persist(&path).map_err(|e| Error::Io(e.error))?;
        Ok(path)
    }

    /// The cached catalog of type `ty`, if present. A file whose header does
    /// not describe `ty` is reported as corrupt.
    pub fn load(&self, ty: &CatalogType) -> Result<Option<Catalog>> {
        let path = self.path_for(ty);
        let file = match fs::File::open(&path) {
            Ok(f) => f,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let catalog = read_catalog(BufReader::new(file), &path)?;
        if catalog.catalog_type() != *ty {
            return Err(Error::CorruptCatalog {
                path,
                reason: "header describes a different catalog type".into(),
            });
        }
        Ok(Some(catalog))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::generate_graphs;

    #[test]
    fn file_names() {
        let ty = CatalogType::orbits(4, 3, 1, true).connected(true);
        assert_eq!(file_name(&ty), "d_o_n4_v3_e1_conn.cat");
        let ty = CatalogType::graphs(5, 1, 2, false);
        assert_eq!(file_name(&ty), "u_g_n5_v1_e2_all.cat");
    }

    #[test]
    fn header_format() {
        let ty = CatalogType::graphs(4, 1, 1, false);
        assert_eq!(
            header_line(&ty, 11),
            "# hgo-catalog v1 directed=0 kind=g n=4 vc=1 ec=1 conn=0 count=11"
        );
        assert_eq!(parse_header(&header_line(&ty, 11)).unwrap(), (ty, 11));
        assert!(parse_header("# hgo-catalog v2 directed=0 kind=g n=4 vc=1 ec=1 conn=0 count=11")
            .unwrap_err()
            .contains("version"));
        assert!(parse_header("# hgo-catalog v1 directed=0 kind=x n=4 vc=1 ec=1 conn=0 count=1").is_err());
        assert!(parse_header("# hgo-catalog v1 directed=0 kind=g n=4").is_err());
    }

    #[test]
    fn store_and_load() {
        let dir = tempfile::tempdir().unwrap();
        let store = CatalogStore::open(dir.path()).unwrap();
        let c = generate_graphs(4, 1, 1, false, false).unwrap();
        let path = store.store(&c).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        assert_eq!(text.lines().count(), 12);
        assert!(text.ends_with('\n'));
        assert_eq!(store.load(&c.catalog_type()).unwrap().unwrap(), c);

        let before = fs::read(&path).unwrap();
        store.store(&c).unwrap();
        assert_eq!(fs::read(&path).unwrap(), before);

        let other = CatalogType::graphs(3, 1, 1, false);
        assert!(store.load(&other).unwrap().is_none());
    }

    #[test]
    fn corrupt_files_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let store = CatalogStore::open(dir.path()).unwrap();
        let c = generate_graphs(3, 1, 1, false, false).unwrap();
        let path = store.store(&c).unwrap();
        let good = fs::read_to_string(&path).unwrap();

        let truncated: String = good.lines().take(3).map(|l| format!("{l}\n")).collect();
        let swapped = {
            let mut lines: Vec<&str> = good.lines().collect();
            lines.swap(1, 2);
            lines.join("\n") + "\n"
        };
        let mangled = good.replacen("0,0,0", "0,x,0", 1);
        let short = good.replacen("0,0,0,0,0,0", "0,0,0", 1);
        let retyped = good.replace("n=3", "n=4");
        for bad in [truncated, swapped, mangled, short, retyped, String::new()] {
            fs::write(&path, bad).unwrap();
            assert!(matches!(
                store.load(&c.catalog_type()),
                Err(Error::CorruptCatalog { .. })
            ));
        }
    }

    #[test]
    fn missing_dir() {
        let dir = tempfile::tempdir().unwrap();
        let gone = dir.path().join("nope");
        assert!(matches!(CatalogStore::open(&gone), Err(Error::CacheDirMissing(_))));
        assert!(CatalogStore::create(&gone).is_ok());
    }

    #[test]
    fn explicit_dir_wins() {
        let p = Path::new("/some/where");
        assert_eq!(CatalogStore::resolve_dir(Some(p)), p);
    }
}

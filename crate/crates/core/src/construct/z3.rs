/// The vector space `Z₃^d` with its hyperplanes through zero.
///
/// Vectors are indexed lexicographically (first coordinate most significant). Each
/// hyperplane is stored by its normal, normalized so the first nonzero coordinate is 1;
/// normals are listed lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Z3Space {
    d: usize,
    vectors: Vec<Vec<u8>>,
    normals: Vec<Vec<u8>>,
}

impl Z3Space {
    pub fn new(d: usize) -> Self {
        let size = 3usize.pow(d as u32);
        let vectors: Vec<Vec<u8>> = (0..size)
            .map(|mut idx| {
                let mut v = vec![0u8; d];
                for slot in v.iter_mut().rev() {
                    *slot = (idx % 3) as u8;
                    idx /= 3;
                }
                v
            })
            .collect();
        let normals = vectors
            .iter()
            .filter(|v| v.iter().find(|&&x| x != 0) == Some(&1))
            .cloned()
            .collect();
        Z3Space {
            d,
            vectors,
            normals,
        }
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    /// `3^d`.
    pub fn size(&self) -> usize {
        self.vectors.len()
    }

    /// Number of hyperplanes, `(3^d − 1)/2`.
    pub fn r(&self) -> usize {
        self.normals.len()
    }

    pub fn vector(&self, idx: usize) -> &[u8] {
        &self.vectors[idx]
    }

    pub fn normals(&self) -> &[Vec<u8>] {
        &self.normals
    }

    /// `π_h(v) = h·v mod 3` for hyperplane `h` numbered from 1.
    pub fn project(&self, h: usize, v: usize) -> u8 {
        let normal = &self.normals[h - 1];
        let dot: u32 = normal
            .iter()
            .zip(&self.vectors[v])
            .map(|(&a, &b)| u32::from(a) * u32::from(b))
            .sum();
        (dot % 3) as u8
    }
}

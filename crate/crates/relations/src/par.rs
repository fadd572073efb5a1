/// Maps every item to a list and concatenates in input order.
#[cfg(feature = "parallel")]
pub(crate) fn par_flat_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> Vec<R> + Sync + Send) -> Vec<R> {
    use rayon::prelude::*;
    items.par_iter().map(f).collect::<Vec<_>>().into_iter().flatten().collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn par_flat_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> Vec<R> + Sync + Send) -> Vec<R> {
    items.iter().flat_map(f).collect()
}

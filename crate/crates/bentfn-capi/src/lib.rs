//! C ABI for the bentfn toolkit. Placeholder while the core library lands.

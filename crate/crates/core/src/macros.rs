/// Forwards owned/borrowed operand combinations of a binary operator to the
/// `&T op &T` implementation.
macro_rules! forward_binop {
    ($imp:ident, $method:ident, $t:ty) => {
        impl std::ops::$imp<$t> for $t {
            type Output = $t;
            fn $method(self, rhs: $t) -> $t {
                std::ops::$imp::$method(&self, &rhs)
            }
        }
        impl<'a> std::ops::$imp<&'a $t> for $t {
            type Output = $t;
            fn $method(self, rhs: &'a $t) -> $t {
                std::ops::$imp::$method(&self, rhs)
            }
        }
        impl<'a> std::ops::$imp<$t> for &'a $t {
            type Output = $t;
            fn $method(self, rhs: $t) -> $t {
                std::ops::$imp::$method(self, &rhs)
            }
        }
    };
}

#pragma once

#include <stdexcept>
#include <string>

namespace polylin {

// Domain errors carry a stable machine-readable code plus a human detail
// string. The CLI maps them to exit status 2 with {"error": code, ...}.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, std::string detail)
        : std::runtime_error(code + ": " + detail),
          code_(std::move(code)),
          detail_(std::move(detail)) {}

    const std::string& code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string code_;
    std::string detail_;
};

namespace errc {
inline constexpr const char* division_by_zero = "DivisionByZero";
inline constexpr const char* field_mismatch = "FieldMismatch";
inline constexpr const char* not_prime = "NotPrime";
inline constexpr const char* shape_mismatch = "ShapeMismatch";
inline constexpr const char* dimension_mismatch = "DimensionMismatch";
inline constexpr const char* not_divisible = "NotDivisible";
inline constexpr const char* no_exact_root = "NoExactRoot";
inline constexpr const char* zero_polynomial = "ZeroPolynomial";
inline constexpr const char* degenerate_input = "DegenerateInput";
inline constexpr const char* not_a_face = "NotAFace";
inline constexpr const char* not_a_pyramid = "NotAPyramid";
inline constexpr const char* not_a_column = "NotAColumn";
inline constexpr const char* not_normalized = "NotNormalized";
inline constexpr const char* block_order_violation = "BlockOrderViolation";
inline constexpr const char* repeated_facet = "RepeatedFacet";
inline constexpr const char* not_a_homomorphism = "NotAHomomorphism";
inline constexpr const char* kernel_meets_semigroup = "KernelMeetsSemigroup";
inline constexpr const char* witness_not_found = "WitnessNotFound";
inline constexpr const char* newton_containment_violated = "NewtonContainmentViolated";
inline constexpr const char* image_escapes_target = "ImageEscapesTarget";
inline constexpr const char* zero_generator_image = "ZeroGeneratorImage";
inline constexpr const char* scalar_root_missing = "ScalarRootMissing";
inline constexpr const char* not_integral_affine = "NotIntegralAffine";
inline constexpr const char* not_a_fibration = "NotAFibration";
inline constexpr const char* invalid_recipe = "InvalidRecipe";
inline constexpr const char* parse_error = "ParseError";
} // namespace errc

} // namespace polylin

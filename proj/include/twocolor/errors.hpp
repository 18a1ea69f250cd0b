#ifndef TWOCOLOR_ERRORS_HPP
#define TWOCOLOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace twocolor {

struct not_divisible : std::runtime_error {
    explicit not_divisible(const std::string& msg) : std::runtime_error(msg) {}
};

struct range_error : std::out_of_range {
    explicit range_error(const std::string& msg) : std::out_of_range(msg) {}
};

struct arg_error : std::invalid_argument {
    explicit arg_error(const std::string& msg) : std::invalid_argument(msg) {}
};

struct no_unit_combination : std::runtime_error {
    explicit no_unit_combination(const std::string& msg) : std::runtime_error(msg) {}
};

struct not_a_unit : std::runtime_error {
    explicit not_a_unit(const std::string& msg) : std::runtime_error(msg) {}
};

struct non_integral_after_rescale : std::runtime_error {
    explicit non_integral_after_rescale(const std::string& msg) : std::runtime_error(msg) {}
};

struct inhomogeneous_entry : std::runtime_error {
    explicit inhomogeneous_entry(const std::string& msg) : std::runtime_error(msg) {}
};

struct no_stem : std::runtime_error {
    explicit no_stem(const std::string& msg) : std::runtime_error(msg) {}
};

struct length_mismatch : std::invalid_argument {
    explicit length_mismatch(const std::string& msg) : std::invalid_argument(msg) {}
};

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace twocolor

#endif

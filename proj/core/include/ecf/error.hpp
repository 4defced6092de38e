#ifndef ECF_ERROR_HPP
#define ECF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ecf {

/// Every failure the library reports, one value per distinct condition.
/// Callers branch on the code; the message is for humans.
enum class Errc {
    // parsing / encoding
    truncated,
    trailing_data,
    length_mismatch,
    unsupported_version,
    unsupported_suite,
    unsupported_content_type,
    invalid_utf8,
    oversize_string,
    oversize_name,
    content_too_large,
    bad_magic,

    // cryptography
    invalid_point,
    low_order_point,
    authentication_failed,
    randomness_failure,
    unsupported_kdf_parameters,

    // container lifecycle
    not_a_recipient,
    tampered_public_part,
    tampered_private_part,
    invalid_name_signature,
    duplicate_recipient,
    no_recipients,
    invalid_signature,
    already_recipient,
    duplicate_name,
    not_found,
    ambiguous_name,
    self_removal_not_confirmed,

    // keystore
    empty_password,
    empty_name,

    // tooling
    io_error,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
    throw Error(code, std::string(errc_name(code)) + ": " + message);
}

}  // namespace ecf

#endif

#include "ecf/error.hpp"

namespace ecf {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::truncated: return "truncated";
        case Errc::trailing_data: return "trailing data";
        case Errc::length_mismatch: return "length mismatch";
        case Errc::unsupported_version: return "unsupported version";
        case Errc::unsupported_suite: return "unsupported cipher suite";
        case Errc::unsupported_content_type: return "unsupported content type";
        case Errc::invalid_utf8: return "invalid UTF-8";
        case Errc::oversize_string: return "oversize string";
        case Errc::oversize_name: return "oversize name";
        case Errc::content_too_large: return "content too large";
        case Errc::bad_magic: return "bad magic";
        case Errc::invalid_point: return "invalid point";
        case Errc::low_order_point: return "low-order point";
        case Errc::authentication_failed: return "authentication failed";
        case Errc::randomness_failure: return "randomness failure";
        case Errc::unsupported_kdf_parameters: return "unsupported KDF parameters";
        case Errc::not_a_recipient: return "not a recipient";
        case Errc::tampered_public_part: return "tampered public part";
        case Errc::tampered_private_part: return "tampered private part";
        case Errc::invalid_name_signature: return "invalid name signature";
        case Errc::duplicate_recipient: return "duplicate recipient";
        case Errc::no_recipients: return "no recipients";
        case Errc::invalid_signature: return "invalid signature";
        case Errc::already_recipient: return "already a recipient";
        case Errc::duplicate_name: return "duplicate name";
        case Errc::not_found: return "not found";
        case Errc::ambiguous_name: return "ambiguous name";
        case Errc::self_removal_not_confirmed: return "self removal not confirmed";
        case Errc::empty_password: return "empty password";
        case Errc::empty_name: return "empty name";
        case Errc::io_error: return "I/O error";
    }
    return "unknown error";
}

}  // namespace ecf

#ifndef ECF_ECF_HPP
#define ECF_ECF_HPP

#include "ecf/bytes.hpp"
#include "ecf/container.hpp"
#include "ecf/crypto.hpp"
#include "ecf/error.hpp"
#include "ecf/format.hpp"
#include "ecf/keystore.hpp"
#include "ecf/random.hpp"
#include "ecf/secure.hpp"
#include "ecf/suite.hpp"
#include "ecf/wire.hpp"

#endif

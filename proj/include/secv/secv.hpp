#ifndef SECV_SECV_HPP
#define SECV_SECV_HPP

#include "secv/blowup_ring.hpp"
#include "secv/descriptors.hpp"
#include "secv/errors.hpp"
#include "secv/golden.hpp"
#include "secv/rational.hpp"
#include "secv/secant.hpp"
#include "secv/series.hpp"
#include "secv/xring.hpp"

#endif

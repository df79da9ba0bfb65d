#ifndef QRANGE_QRANGE_HPP
#define QRANGE_QRANGE_HPP

#include "qrange/core.hpp"
#include "qrange/sampler.hpp"
#include "qrange/aspace.hpp"
#include "qrange/engine.hpp"
#include "qrange/semihilbert.hpp"
#include "qrange/geometry.hpp"
#include "qrange/verify.hpp"
#include "qrange/io.hpp"

#endif

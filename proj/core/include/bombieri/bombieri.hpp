#ifndef BOMBIERI_BOMBIERI_HPP
#define BOMBIERI_BOMBIERI_HPP

#include "bombieri/bounds.hpp"
#include "bombieri/compare.hpp"
#include "bombieri/core.hpp"
#include "bombieri/error.hpp"
#include "bombieri/norms.hpp"
#include "bombieri/verify.hpp"

#endif

#ifndef BILLIARD_BILLIARD_HPP
#define BILLIARD_BILLIARD_HPP

#include "core.hpp"
#include "formula.hpp"
#include "geometry.hpp"
#include "oracle.hpp"
#include "render.hpp"
#include "scan.hpp"

#endif

#pragma once

#include "angle_profile.hpp"
#include "curve.hpp"
#include "errors.hpp"
#include "figures.hpp"
#include "frequency.hpp"
#include "io.hpp"
#include "profile.hpp"
#include "quadrature.hpp"
#include "roots.hpp"
#include "spectrum.hpp"
#include "svg.hpp"

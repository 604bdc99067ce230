#pragma once

#include "zonet/crescent.hpp"
#include "zonet/geom/angle.hpp"
#include "zonet/geom/circle_quad.hpp"
#include "zonet/geom/exact.hpp"
#include "zonet/geom/vec.hpp"
#include "zonet/sweep.hpp"
#include "zonet/unfold.hpp"
#include "zonet/verify.hpp"
#include "zonet/zonohedron.hpp"

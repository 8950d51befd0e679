#pragma once

#include "homshape/curve.hpp"
#include "homshape/error.hpp"
#include "homshape/evolution.hpp"
#include "homshape/generators.hpp"
#include "homshape/io.hpp"
#include "homshape/lie.hpp"
#include "homshape/manifold.hpp"
#include "homshape/metrics.hpp"
#include "homshape/paths.hpp"
#include "homshape/reparam.hpp"
#include "homshape/srvt.hpp"

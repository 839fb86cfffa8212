#pragma once

#include "lktw/curves.hpp"
#include "lktw/errors.hpp"
#include "lktw/fields.hpp"
#include "lktw/geometry.hpp"
#include "lktw/io.hpp"
#include "lktw/kernels.hpp"
#include "lktw/linkage.hpp"
#include "lktw/presets.hpp"
#include "lktw/samplers.hpp"
#include "lktw/spectral.hpp"
#include "lktw/summation.hpp"

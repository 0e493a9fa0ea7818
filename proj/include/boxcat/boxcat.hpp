#pragma once

// Umbrella header for the whole library.

#include "boxcat/cat0.hpp"
#include "boxcat/complex.hpp"
#include "boxcat/errors.hpp"
#include "boxcat/homology.hpp"
#include "boxcat/json_io.hpp"
#include "boxcat/mbf.hpp"
#include "boxcat/morphism.hpp"
#include "boxcat/normal_form.hpp"
#include "boxcat/operad.hpp"
#include "boxcat/point.hpp"
#include "boxcat/poset.hpp"
#include "boxcat/saturate.hpp"

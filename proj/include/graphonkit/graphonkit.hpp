#pragma once

#include "graphonkit/errors.hpp"
#include "graphonkit/rng.hpp"
#include "graphonkit/graphon.hpp"
#include "graphonkit/cutnorm.hpp"
#include "graphonkit/spectral.hpp"
#include "graphonkit/coupling.hpp"
#include "graphonkit/ops.hpp"
#include "graphonkit/metrics.hpp"
#include "graphonkit/sampler.hpp"
#include "graphonkit/gallery.hpp"
#include "graphonkit/io.hpp"

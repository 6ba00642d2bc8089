#ifndef PEAKSTAB_PEAKSTAB_HPP
#define PEAKSTAB_PEAKSTAB_HPP

#include "peakstab/charge.hpp"
#include "peakstab/error.hpp"
#include "peakstab/generate.hpp"
#include "peakstab/incidence.hpp"
#include "peakstab/indecomposables.hpp"
#include "peakstab/io.hpp"
#include "peakstab/linalg.hpp"
#include "peakstab/peak_space.hpp"
#include "peakstab/polygon.hpp"
#include "peakstab/poset.hpp"
#include "peakstab/quiver.hpp"
#include "peakstab/segments.hpp"
#include "peakstab/shapes.hpp"
#include "peakstab/stability.hpp"
#include "peakstab/type_a.hpp"

#endif

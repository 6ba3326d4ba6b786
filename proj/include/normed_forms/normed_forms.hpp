#pragma once

#include "normed_forms/integer.hpp"
#include "normed_forms/matrix.hpp"
#include "normed_forms/forms.hpp"
#include "normed_forms/pairings.hpp"
#include "normed_forms/trigroup.hpp"
#include "normed_forms/matembed.hpp"
#include "normed_forms/lattices.hpp"
#include "normed_forms/classify.hpp"

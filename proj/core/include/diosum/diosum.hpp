#pragma once

#include "diosum/ball.hpp"
#include "diosum/continued_fraction.hpp"
#include "diosum/counting.hpp"
#include "diosum/errors.hpp"
#include "diosum/irrational.hpp"
#include "diosum/metric.hpp"
#include "diosum/precision.hpp"
#include "diosum/predictions.hpp"
#include "diosum/rational.hpp"
#include "diosum/real_engine.hpp"
#include "diosum/sums.hpp"

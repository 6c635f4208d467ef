# The four system classes, unified by lifting.
#
# Class 0 outputs a constant; class 1 a function of time; class 2 a function
# of an arbitrary input; class 3 a function of the input *and* an internal
# status.  Lifting turns each lower class into a class-3 transfer function
# that simply never touches the threaded state, so one composition story
# covers them all.

from statethread.core import Action
from statethread.classify import Class0, Class1, Class2, Class3, lift, run_system

constant = Class0(7)
clock_driven = Class1(lambda t: 2 * t)
doubler = Class2(lambda x: x + 1)

# Each lifted system maps a sequence of inputs to outputs; the state (here
# the integer 0) comes back untouched for classes 0..2.
print(run_system(lift(constant), [9, 9, 9], 0))       # ([7, 7, 7], 0)
print(run_system(lift(clock_driven), [0, 1, 2, 3], 0))  # ([0, 2, 4, 6], 0)
print(run_system(lift(doubler), [4, 40], 0))          # ([5, 41], 0)

# A class-3 system genuinely uses its status: this one accumulates.
accumulator = Class3(lambda x: Action(lambda s: (x + s, x + s)))
print(run_system(lift(accumulator), [1, 2, 3, 4], 0))  # ([1, 3, 6, 10], 10)

# State threading is exactly sequential: running a split input in two halves
# from the intermediate state gives the same outputs.
outputs, mid = run_system(lift(accumulator), [1, 2], 0)
rest, final = run_system(lift(accumulator), [3, 4], mid)
print(outputs + rest, final)  # [1, 3, 6, 10] 10

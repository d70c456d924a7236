function total(items) {
  let sum = 0;
  for (const item of items {
    sum += item.price *;
  }
  return sum;
}

const order = { items: [1, 2, 3] ;
console.log(total(order.items));
class {
}
